#include "esdef/audit.hpp"

#include "esdef/errors.hpp"
#include "esdef/local.hpp"
#include "esdef/newton.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace esdef {

std::string_view to_string(AuditStatus status)
{
    switch (status) {
    case AuditStatus::Holds: return "holds";
    case AuditStatus::Fails: return "fails";
    case AuditStatus::NotApplicable: return "not-applicable";
    case AuditStatus::Value: return "value";
    }
    return "?";
}

std::vector<Rational> sample_rationals(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 97), den(1, 97), sign(0, 1);
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational t(num(rng) * (sign(rng) ? -1 : 1), den(rng));
        t.canonicalize();
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
    }
    return out;
}

namespace {

std::string text(const LocalPoly& p)
{
    return p.to_string(MonomialOrder::Local);
}

// First element of `from` outside `into`, if any.
std::optional<LocalPoly> inclusion_witness(const IdealPresentation& from, const IdealPresentation& into,
                                           std::string* detail = nullptr)
{
    std::optional<LocalPoly> first;
    for (const auto& g : from.basis().elements) {
        const LocalPoly r = normal_form(g, into);
        if (r.is_zero())
            continue;
        if (!first)
            first = g;
        if (detail)
            *detail += (detail->empty() ? "" : "; ") + std::string("NF(") + text(g) + ") = " + text(r);
    }
    return first;
}

// Monomials of Newton order >= 1 (NND) or weighted degree >= d (SQH).
std::optional<std::function<bool(const Monomial&)>> newton_predicate(const LocalPoly& f)
{
    if (auto t = is_sqh(f)) {
        const QuasiHomogeneousType q = *t;
        return [q](const Monomial& m) { return q.w1 * m.a + q.w2 * m.b >= q.d; };
    }
    try {
        if (is_nnd(f)) {
            const NewtonDiagram nd = newton_diagram(f);
            return [nd](const Monomial& m) { return newton_order(m, nd) >= 1; };
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotConvenient && e.code() != ErrorCode::DegenerateDiagram)
            throw;
    }
    return std::nullopt;
}

// Does g satisfy the multiplicity conditions of I^s by direct pullback?
std::optional<int> pullback_violation(const EssentialTree& tree, const LocalPoly& g)
{
    for (const auto& p : tree.points) {
        if (!p.essential)
            continue;
        const ChartMap phi = chart_map(tree, p.id, p.m_hat - 1);
        if (!compose(to_tower(g), phi.X, phi.Y, p.m_hat - 1).is_zero())
            return p.id;
    }
    return std::nullopt;
}

LocalPoly random_form(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<LocalPoly::Term> terms;
    for (const auto& m : monomials_of_degree(degree)) {
        const long c = coef(rng);
        if (c != 0)
            terms.emplace_back(m, Rational(c));
    }
    if (terms.empty())
        terms.emplace_back(Monomial{degree, 0}, Rational(1));
    return LocalPoly::from_terms(std::move(terms));
}

long checked_colength(const IdealPresentation& I, const char* name)
{
    const auto c = colength(I);
    if (!c)
        throw Error(ErrorCode::InfiniteColength, std::string(name) + " has infinite colength");
    return *c;
}

class Auditor {
public:
    Auditor(const LocalPoly& f, const AuditOptions& opt) : f_(f), opt_(opt) {}

    std::vector<AuditEntry> run()
    {
        smooth_ = multiplicity(f_) == 1;

        tree_checks();
        add("degree_formula", "colength(I^s) equals the sum of m(m+1)/2 over essential points", [&](AuditEntry& e) {
            const long c = checked_colength(ideals().s.ideal, "I^s");
            const long d = degree_formula(ideals().tree);
            e.detail = "colength " + std::to_string(c) + ", formula " + std::to_string(d);
            return c == d;
        });
        inclusion("chain.ea_fix_in_s", "I^ea_fix is contained in I^s", [&]() -> auto& { return ideals().fixed_tjurina; },
                  [&]() -> auto& { return ideals().s.ideal; });
        inclusion("chain.s_in_es_fix", "I^s is contained in I^es_fix", [&]() -> auto& { return ideals().s.ideal; },
                  [&]() -> auto& { return ideals().es_fix.ideal; });
        inclusion("chain.ea_fix_in_es_fix", "I^ea_fix is contained in I^es_fix",
                  [&]() -> auto& { return ideals().fixed_tjurina; }, [&]() -> auto& { return ideals().es_fix.ideal; });
        inclusion("chain.es_fix_in_es", "I^es_fix is contained in I^es", [&]() -> auto& { return ideals().es_fix.ideal; },
                  [&]() -> auto& { return ideals().es; });
        inclusion("chain.ea_in_es", "I^ea is contained in I^es", [&]() -> auto& { return ideals().tjurina; },
                  [&]() -> auto& { return ideals().es; });
        add("gap.tau_fix", "tau_fix - tau = 2", [&](AuditEntry& e) {
            const long a = checked_colength(ideals().fixed_tjurina, "I^ea_fix");
            const long b = checked_colength(ideals().tjurina, "I^ea");
            e.detail = std::to_string(a) + " - " + std::to_string(b) + " = " + std::to_string(a - b);
            return a - b == 2;
        });
        add("gap.tau_es_fix", "tau^es_fix - tau^es = 2", [&](AuditEntry& e) {
            const long a = checked_colength(ideals().es_fix.ideal, "I^es_fix");
            const long b = checked_colength(ideals().es, "I^es");
            e.detail = std::to_string(a) + " - " + std::to_string(b) + " = " + std::to_string(a - b);
            return a - b == 2;
        });
        add("hilbert.consensus", "the four rooted Hilbert scheme dimensions agree", [&](AuditEntry& e) {
            const HilbertDimension h = hilbert_dim(ideals());
            e.detail = std::to_string(h.by_free_vertices) + ", " + std::to_string(h.by_quotient) + ", " +
                       std::to_string(h.by_degree_formula) + ", " + std::to_string(h.by_tau_s);
            return h.consensus;
        });
        add("truncation.s", "sampled forms of degree D + 1 satisfy the I^s conditions by direct pullback",
            [&](AuditEntry& e) {
                std::mt19937_64 rng(opt_.seed);
                const int d = ideals().s.D + 1;
                for (int i = 0; i < 4; ++i) {
                    const LocalPoly g = random_form(rng, d);
                    if (auto q = pullback_violation(ideals().tree, g)) {
                        e.witness = text(g);
                        e.detail = "multiplicity too low at q" + std::to_string(*q);
                        return false;
                    }
                }
                e.detail = "4 forms of degree " + std::to_string(d);
                return true;
            });
        add("truncation.es_fix", "sampled forms of degree D + 1 lie in I^ea_fix or satisfy the I^s conditions",
            [&](AuditEntry& e) {
                std::mt19937_64 rng(opt_.seed + 1);
                const int d = ideals().es_fix.D + 1;
                for (int i = 0; i < 4; ++i) {
                    const LocalPoly g = random_form(rng, d);
                    if (!contains(ideals().fixed_tjurina, g) && pullback_violation(ideals().tree, g)) {
                        e.witness = text(g);
                        return false;
                    }
                }
                e.detail = "4 forms of degree " + std::to_string(d);
                return true;
            });
        add_value("straight.verdict", "I^es = <f, j(f)> + I^s", [&](AuditEntry& e) {
            const StraightnessVerdict v = straightness_check(ideals());
            e.detail = v.straight ? "straight" : "not straight (" + v.side + ")";
            if (v.witness)
                e.witness = text(*v.witness);
        });
        newton_entries();
        add_value("value.straight_dim", "tau_fix - tau^s (signed)", [&](AuditEntry& e) {
            const long a = checked_colength(ideals().fixed_tjurina, "I^ea_fix");
            const long b = checked_colength(ideals().s.ideal, "I^s");
            e.detail = std::to_string(a - b);
        });
        add_value("value.s_mod_intersection", "dim I^s / (I^s meet I^ea_fix)", [&](AuditEntry& e) {
            const long a = checked_colength(ideals().fixed_tjurina, "I^ea_fix");
            const long b = checked_colength(ideals().fixed_tjurina + ideals().s.ideal, "I^ea_fix + I^s");
            e.detail = std::to_string(a - b);
        });
        return std::move(out_);
    }

private:
    const DeformationIdeals& ideals()
    {
        if (error_)
            throw *error_;
        if (!ideals_) {
            try {
                ideals_ = deformation_ideals(f_, opt_.trunc);
            } catch (const Error& e) {
                error_ = e;
                throw;
            }
        }
        return *ideals_;
    }

    void add(const std::string& id, const std::string& claim, const std::function<bool(AuditEntry&)>& check)
    {
        AuditEntry e{id, claim, AuditStatus::NotApplicable, "", std::nullopt};
        if (smooth_) {
            e.detail = "smooth germ";
        } else {
            try {
                e.status = check(e) ? AuditStatus::Holds : AuditStatus::Fails;
            } catch (const Error& err) {
                if (err.code() == ErrorCode::NotApplicable) {
                    e.status = AuditStatus::NotApplicable;
                } else {
                    e.status = AuditStatus::Fails;
                }
                e.detail = std::string(error_code_name(err.code())) + ": " + err.what();
            }
        }
        out_.push_back(std::move(e));
    }

    void add_value(const std::string& id, const std::string& claim, const std::function<void(AuditEntry&)>& fill)
    {
        add(id, claim, [&](AuditEntry& e) {
            fill(e);
            return true;
        });
        if (out_.back().status == AuditStatus::Holds)
            out_.back().status = AuditStatus::Value;
    }

    void inclusion(const std::string& id, const std::string& claim,
                   const std::function<const IdealPresentation&()>& from,
                   const std::function<const IdealPresentation&()>& into)
    {
        add(id, claim, [&](AuditEntry& e) {
            std::string detail;
            const auto w = inclusion_witness(from(), into(), &detail);
            if (w)
                e.witness = text(*w);
            e.detail = detail;
            return !w;
        });
    }

    void tree_checks()
    {
        const std::pair<const char*, const char*> kinds[] = {
            {"tree.proximity", "proximity equality"},
            {"tree.m_hat", "m-hat recursion"},
            {"tree.m_tilde", "m-tilde"},
            {"tree.markers", "terminal marker"},
        };
        for (const auto& [id, prefix] : kinds) {
            add(id, std::string(prefix) + " holds at every point", [&](AuditEntry& e) {
                bool ok = true;
                int n = 0;
                for (const auto& c : validate_tree(ideals().tree)) {
                    if (c.name.rfind(prefix, 0) != 0)
                        continue;
                    ++n;
                    if (!c.ok) {
                        ok = false;
                        e.detail += (e.detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
                    }
                }
                if (ok)
                    e.detail = std::to_string(n) + (n == 1 ? " check" : " checks");
                return ok;
            });
        }
    }

    void newton_entries()
    {
        std::optional<std::function<bool(const Monomial&)>> pred;
        bool pred_known = false;
        auto predicate = [&]() -> const std::function<bool(const Monomial&)>& {
            if (!pred_known) {
                pred = newton_predicate(f_);
                pred_known = true;
            }
            if (!pred)
                throw Error(ErrorCode::NotApplicable, "neither semiquasihomogeneous nor Newton nondegenerate");
            return *pred;
        };
        add("straight.newton", "Newton nondegenerate or SQH germs are straight", [&](AuditEntry& e) {
            predicate();
            const StraightnessVerdict v = straightness_check(ideals());
            if (v.witness)
                e.witness = text(*v.witness);
            return v.straight;
        });
        add("newton.es_ideal", "I^es = <j(f), monomials of Newton order >= 1>", [&](AuditEntry& e) {
            predicate();
            const IdealPresentation n = es_ideal_newton(f_);
            std::string detail;
            auto w = inclusion_witness(n, ideals().es, &detail);
            if (!w)
                w = inclusion_witness(ideals().es, n, &detail);
            if (w)
                e.witness = text(*w);
            e.detail = detail;
            return !w;
        });
        std::vector<LocalPoly> basis;
        add("newton.basis", "monomial basis of I^es / I^ea of Newton order >= 1 with tau - tau^es elements",
            [&](AuditEntry& e) {
                const auto& p = predicate();
                basis = es_basis_newton(f_);
                const long expected = checked_colength(ideals().tjurina, "I^ea") - checked_colength(ideals().es, "I^es");
                e.detail = std::to_string(basis.size()) + " elements, expected " + std::to_string(expected);
                for (const auto& b : basis) {
                    if (!p(b.terms().front().first)) {
                        e.witness = text(b);
                        return false;
                    }
                }
                return static_cast<long>(basis.size()) == expected;
            });
        add("newton.mu_constant", "mu(f + t b) = mu(f) for basis monomials b at two sampled t", [&](AuditEntry& e) {
            predicate();
            if (basis.empty() && checked_colength(ideals().tjurina, "I^ea") != checked_colength(ideals().es, "I^es"))
                throw Error(ErrorCode::NotApplicable, "no monomial basis");
            const long mu = milnor_number(f_);
            for (const auto& b : basis) {
                for (const auto& [t, m] : milnor_drop_check(f_, b, {}, opt_.seed)) {
                    if (m != mu) {
                        e.witness = text(b);
                        e.detail = "mu = " + std::to_string(m) + " at t = " + t.get_str();
                        return false;
                    }
                }
            }
            e.detail = std::to_string(basis.size()) + " directions, mu = " + std::to_string(mu);
            return true;
        });
    }

    LocalPoly f_;
    AuditOptions opt_;
    bool smooth_ = false;
    std::optional<DeformationIdeals> ideals_;
    std::optional<Error> error_;
    std::vector<AuditEntry> out_;
};

}  // namespace

HilbertDimension hilbert_dim(const DeformationIdeals& I)
{
    HilbertDimension h;
    const EssentialTree& tree = I.tree;
    if (tree.smooth())
        throw Error(ErrorCode::NotApplicable, "smooth germ");
    h.by_free_vertices = free_vertex_count(tree);

    // kernels of both systems at a common truncation
    const int D = std::max(I.s.D, I.es_fix.D);
    std::vector<int> v(tree.points.size(), 1);
    for (const auto& p : tree.points)
        if (p.essential)
            v[static_cast<std::size_t>(p.id)] = p.m_hat;
    const long ks = solve_conditions(cluster_conditions(tree, v, D)).kernel_dimension;
    const long kf = solve_conditions(es_fix_conditions(tree, D)).kernel_dimension;
    h.by_quotient = kf - ks;

    const long tau_es = checked_colength(I.es, "I^es");
    h.by_degree_formula = degree_formula(tree) - tau_es - 2;
    h.by_tau_s = checked_colength(I.s.ideal, "I^s") - checked_colength(I.es_fix.ideal, "I^es_fix");
    h.consensus = h.by_free_vertices == h.by_quotient && h.by_quotient == h.by_degree_formula &&
                  h.by_degree_formula == h.by_tau_s;
    if (!h.consensus) {
        std::ostringstream os;
        os << "free vertices " << h.by_free_vertices << ", kernel difference " << kf << " - " << ks << " at D = " << D
           << ", deg Z^s " << degree_formula(tree) << " - tau^es " << tau_es << " - 2, tau^s - tau^es_fix "
           << h.by_tau_s;
        h.diagnostics = os.str();
    }
    return h;
}

HilbertDimension hilbert_dim(const LocalPoly& f)
{
    return hilbert_dim(deformation_ideals(f));
}

StraightnessVerdict straightness_check(const DeformationIdeals& I)
{
    StraightnessVerdict v;
    const auto [fx, fy] = jacobian(I.tree.f);
    std::vector<LocalPoly> gens{I.tree.f, fx, fy};
    for (const auto& g : I.s.ideal.basis().elements)
        gens.push_back(g);
    const IdealPresentation rhs(std::move(gens));
    if (auto w = inclusion_witness(I.es, rhs)) {
        v.witness = w;
        v.side = "I^es not contained in <f, j(f)> + I^s";
        return v;
    }
    if (auto w = inclusion_witness(rhs, I.es)) {
        v.witness = w;
        v.side = "<f, j(f)> + I^s not contained in I^es";
        return v;
    }
    v.straight = true;
    return v;
}

StraightnessVerdict straightness_check(const LocalPoly& f)
{
    return straightness_check(deformation_ideals(f));
}

std::vector<AuditEntry> claims_audit(const LocalPoly& f, const AuditOptions& options)
{
    return Auditor(f, options).run();
}

std::vector<std::pair<Rational, long>> milnor_drop_check(const LocalPoly& f, const LocalPoly& g,
                                                         std::vector<Rational> samples, std::uint64_t seed)
{
    if (samples.empty())
        samples = sample_rationals(seed, 2);
    std::vector<std::pair<Rational, long>> out;
    for (const auto& t : samples)
        out.emplace_back(t, milnor_number(f + g.scaled(t)));
    return out;
}

InvariantReport invariant_report(const LocalPoly& f, const AuditOptions& options)
{
    InvariantReport r;
    r.f = f;
    r.audit = claims_audit(f, options);
    const DeformationIdeals I = deformation_ideals(f, options.trunc);
    r.smooth = I.tree.smooth();
    if (r.smooth)
        return r;
    r.mu = milnor_number(f);
    r.tau = checked_colength(I.tjurina, "I^ea");
    r.tau_fix = checked_colength(I.fixed_tjurina, "I^ea_fix");
    r.tau_es = checked_colength(I.es, "I^es");
    r.tau_es_fix = checked_colength(I.es_fix.ideal, "I^es_fix");
    r.tau_s = checked_colength(I.s.ideal, "I^s");
    r.deg_zs = degree_formula(I.tree);
    for (const auto& p : I.tree.points) {
        if (!p.essential)
            continue;
        r.m.push_back(p.m);
        r.m_hat.push_back(p.m_hat);
    }
    r.free_vertices = free_vertex_count(I.tree);
    r.satellites = satellite_count(I.tree);
    r.hilbert = hilbert_dim(I);
    r.straightness = straightness_check(I);
    r.straight_dim_signed = r.tau_fix - r.tau_s;
    r.s_mod_intersection = r.tau_fix - checked_colength(I.fixed_tjurina + I.s.ideal, "I^ea_fix + I^s");
    return r;
}

}  // namespace esdef
