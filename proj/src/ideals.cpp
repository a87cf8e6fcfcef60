#include "esdef/ideals.hpp"

#include "esdef/errors.hpp"
#include "esdef/local.hpp"
#include "esdef/newton.hpp"

#include <algorithm>

namespace esdef {

namespace {

IdealPresentation unit_ideal()
{
    return IdealPresentation({LocalPoly(Rational(1))});
}

TruncatedIdeal unit_truncated()
{
    return {unit_ideal(), 0, 1};
}

int resolve_trunc(std::optional<int> trunc, int minimal)
{
    if (!trunc)
        return minimal;
    if (*trunc < minimal)
        throw Error(ErrorCode::InvalidArgument, "truncation degree " + std::to_string(*trunc) +
                                                    " is below the sound minimum " + std::to_string(minimal));
    return *trunc;
}

std::vector<LocalPoly> monomial_generators(const std::vector<Monomial>& ms)
{
    std::vector<LocalPoly> out;
    for (const auto& m : ms)
        out.push_back(LocalPoly::term(m, Rational(1)));
    return out;
}

// Minimal monomials x^a y^b with w1 a + w2 b >= d.
std::vector<Monomial> weighted_staircase(const QuasiHomogeneousType& t)
{
    std::vector<Monomial> out;
    const int amax = (t.d + t.w1 - 1) / t.w1;
    for (int a = 0; a <= amax; ++a) {
        const int rest = t.d - t.w1 * a;
        const int b = rest <= 0 ? 0 : (rest + t.w2 - 1) / t.w2;
        out.push_back({a, b});
        if (b == 0)
            break;
    }
    return out;
}

// Minimal monomials of Newton order >= 1.
std::vector<Monomial> newton_staircase(const NewtonDiagram& nd)
{
    std::vector<Monomial> out;
    for (int a = 0;; ++a) {
        int b = 0;
        while (newton_order({a, b}, nd) < 1)
            ++b;
        out.push_back({a, b});
        if (b == 0)
            break;
    }
    return out;
}

// Staircase generating the Newton part, or nullopt when neither SQH nor NND.
std::optional<std::vector<Monomial>> newton_part(const LocalPoly& f, std::optional<QuasiHomogeneousType>* type = nullptr)
{
    if (auto t = is_sqh(f)) {
        if (type)
            *type = t;
        return weighted_staircase(*t);
    }
    try {
        if (is_nnd(f))
            return newton_staircase(newton_diagram(f));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotConvenient && e.code() != ErrorCode::DegenerateDiagram)
            throw;
    }
    return std::nullopt;
}

}  // namespace

TruncatedIdeal cluster_ideal(const EssentialTree& tree, const std::vector<int>& virtual_mult, std::optional<int> trunc)
{
    if (tree.smooth())
        return unit_truncated();
    const int D = resolve_trunc(trunc, minimal_truncation(tree, virtual_mult));
    return solve_conditions(cluster_conditions(tree, virtual_mult, D));
}

TruncatedIdeal topological_singularity_ideal(const EssentialTree& tree, std::optional<int> trunc)
{
    if (tree.smooth())
        return unit_truncated();
    std::vector<int> v(tree.points.size(), 0);
    for (const auto& p : tree.points)
        v[static_cast<std::size_t>(p.id)] = p.essential ? p.m_hat : 0;
    for (auto& x : v)
        if (x == 0)
            x = 1;
    TruncatedIdeal out = cluster_ideal(tree, v, trunc);
    const auto len = colength(out.ideal);
    const long expected = degree_formula(tree);
    if (!len || *len != expected)
        throw Error(ErrorCode::InternalInconsistency,
                    "colength of I^s is " + (len ? std::to_string(*len) : std::string("infinite")) +
                        " but the degree formula gives " + std::to_string(expected));
    return out;
}

TruncatedIdeal topological_singularity_ideal(const LocalPoly& f)
{
    return topological_singularity_ideal(resolve(f));
}

std::pair<IdealPresentation, IdealPresentation> tjurina_ideals(const LocalPoly& f)
{
    IdealPresentation tj = tjurina_ideal(f);
    if (!colength(tj))
        throw Error(ErrorCode::NonIsolated, "Tjurina number is infinite");
    return {std::move(tj), fixed_tjurina_ideal(f)};
}

TruncatedIdeal es_fix_ideal(const EssentialTree& tree, std::optional<int> trunc)
{
    if (tree.smooth())
        return unit_truncated();
    std::vector<int> v(tree.points.size(), 1);
    for (const auto& p : tree.points)
        if (p.essential)
            v[static_cast<std::size_t>(p.id)] = p.m_hat;
    int minimal = minimal_truncation(tree, v);
    const IdealPresentation fix = fixed_tjurina_ideal(tree.f);
    if (colength(fix))
        minimal = std::min(minimal, highest_corner(fix).degree());
    const int D = resolve_trunc(trunc, minimal);
    return solve_conditions(es_fix_conditions(tree, D));
}

TruncatedIdeal es_fix_ideal(const LocalPoly& f)
{
    return es_fix_ideal(resolve(f));
}

IdealPresentation es_ideal(const LocalPoly& f, const IdealPresentation& es_fix)
{
    const auto [fx, fy] = jacobian(f);
    std::vector<LocalPoly> gens{fx, fy};
    for (const auto& g : es_fix.basis().elements)
        gens.push_back(g);
    return IdealPresentation(std::move(gens));
}

IdealPresentation es_ideal(const LocalPoly& f)
{
    const EssentialTree tree = resolve(f);
    if (tree.smooth())
        return unit_ideal();
    return es_ideal(f, es_fix_ideal(tree).ideal);
}

IdealPresentation es_ideal_newton(const LocalPoly& f)
{
    tjurina_ideals(f);
    if (!multiplicity(f) || *multiplicity(f) < 2)
        return unit_ideal();
    const auto part = newton_part(f);
    if (!part)
        throw Error(ErrorCode::NotApplicable, "germ is neither semiquasihomogeneous nor Newton nondegenerate");
    const auto [fx, fy] = jacobian(f);
    std::vector<LocalPoly> gens{fx, fy};
    for (auto& g : monomial_generators(*part))
        gens.push_back(std::move(g));
    return IdealPresentation(std::move(gens));
}

std::vector<LocalPoly> es_basis_newton(const LocalPoly& f)
{
    const IdealPresentation tj = tjurina_ideals(f).first;
    if (!multiplicity(f) || *multiplicity(f) < 2)
        return {};
    const auto part = newton_part(f);
    if (!part)
        throw Error(ErrorCode::NotApplicable, "germ is neither semiquasihomogeneous nor Newton nondegenerate");
    const int d = highest_corner(tj).degree();
    std::vector<LocalPoly> candidates;
    for (int k = 0; k <= d; ++k)
        for (const auto& m : monomials_of_degree(k))
            if (std::any_of(part->begin(), part->end(), [&](const Monomial& s) { return s.divides(m); }))
                candidates.push_back(LocalPoly::term(m, Rational(1)));
    std::vector<LocalPoly> out;
    for (const auto& r : global_rereduce(candidates, tj, d)) {
        if (r.is_zero())
            continue;
        if (r.size() != 1)
            throw Error(ErrorCode::BasisNotMonomial, "candidate reduces to " + r.to_string(MonomialOrder::Global));
        const LocalPoly m = LocalPoly::term(r.terms().front().first, Rational(1));
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    return out;
}

DeformationIdeals deformation_ideals(const LocalPoly& f, std::optional<int> trunc)
{
    EssentialTree tree = resolve(f);
    if (tree.smooth()) {
        return {std::move(tree), unit_ideal(), unit_ideal(), unit_truncated(), unit_truncated(), unit_ideal()};
    }
    auto [tj, tjfix] = tjurina_ideals(f);
    TruncatedIdeal s = topological_singularity_ideal(tree, trunc);
    TruncatedIdeal fix = es_fix_ideal(tree, trunc);
    IdealPresentation es = es_ideal(f, fix.ideal);
    return {std::move(tree), std::move(tj), std::move(tjfix), std::move(s), std::move(fix), std::move(es)};
}

}  // namespace esdef
