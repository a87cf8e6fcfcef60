#include "esdef/standard_basis.hpp"

#include "esdef/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace esdef {

namespace {

int ecart(const LocalPoly& p)
{
    return p.max_degree() - *p.order();
}

LocalPoly monic(const LocalPoly& p, MonomialOrder ord)
{
    const Rational& c = p.leading(ord).second;
    return c == 1 ? p : p.scaled(1 / c);
}

struct Staircase {
    bool finite = false;
    long colength = 0;
    int max_degree = -1;
    std::vector<int> heights;  // heights[a] = number of standard monomials x^a y^b
};

Staircase staircase(const std::vector<Monomial>& leads)
{
    Staircase s;
    int ax = std::numeric_limits<int>::max();
    bool has_y = false;
    for (const auto& m : leads) {
        if (m.b == 0)
            ax = std::min(ax, m.a);
        if (m.a == 0)
            has_y = true;
    }
    if (ax == std::numeric_limits<int>::max() || !has_y)
        return s;
    s.finite = true;
    for (int a = 0; a < ax; ++a) {
        int h = std::numeric_limits<int>::max();
        for (const auto& m : leads)
            if (m.a <= a)
                h = std::min(h, m.b);
        s.heights.push_back(h);
        s.colength += h;
        if (h > 0)
            s.max_degree = std::max(s.max_degree, a + h - 1);
    }
    return s;
}

class Engine {
public:
    explicit Engine(MonomialOrder ord) : ord_(ord) {}

    std::optional<int> trunc;

    LocalPoly cut(const LocalPoly& p) const { return trunc ? p.truncated(*trunc) : p; }

    // Basis elements keep their leading term even above the truncation degree.
    LocalPoly cut_element(const LocalPoly& p) const
    {
        return trunc ? p.truncated(std::max(*trunc, p.leading(ord_).first.degree())) : p;
    }

    // Mora's weak normal form against `T`.
    LocalPoly weak_nf(LocalPoly h, const std::vector<LocalPoly>& T) const
    {
        std::vector<const LocalPoly*> pool;
        std::deque<LocalPoly> extra;  // stable addresses
        for (const auto& t : T)
            pool.push_back(&t);
        for (;;) {
            h = cut(h);
            if (h.is_zero())
                return h;
            const auto& [lm, lc] = h.leading(ord_);
            const LocalPoly* best = nullptr;
            int best_ecart = 0;
            for (const LocalPoly* g : pool) {
                const Monomial& lg = g->leading(ord_).first;
                if (!lg.divides(lm))
                    continue;
                const int e = ord_ == MonomialOrder::Local ? ecart(*g) : 0;
                if (!best || e < best_ecart) {
                    best = g;
                    best_ecart = e;
                }
            }
            if (!best)
                return h;
            if (ord_ == MonomialOrder::Local && best_ecart > ecart(h)) {
                extra.push_back(h);
                pool.push_back(&extra.back());
            }
            const auto& [lg, cg] = best->leading(ord_);
            h = LocalPoly::merge(h, -(lc / cg), lm / lg, *best);
        }
    }

    // Full reduction: every term ends up outside the leading ideal. Needs
    // either the global order or a truncation degree.
    LocalPoly full_nf(LocalPoly h, const std::vector<LocalPoly>& G) const
    {
        h = cut(h);
        for (;;) {
            if (h.is_zero())
                return h;
            bool reduced = false;
            for (std::size_t k : scan_order(h)) {
                const auto& [m, c] = h.terms()[k];
                for (const auto& g : G) {
                    const auto& [lg, cg] = g.leading(ord_);
                    if (lg.divides(m)) {
                        h = cut(LocalPoly::merge(h, -(c / cg), m / lg, g));
                        reduced = true;
                        break;
                    }
                }
                if (reduced)
                    break;
            }
            if (!reduced)
                return h;
        }
    }

private:
    // Term indices from largest to smallest in the active order.
    std::vector<std::size_t> scan_order(const LocalPoly& h) const
    {
        std::vector<std::size_t> idx(h.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        if (ord_ == MonomialOrder::Global)
            std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
                return compare(h.terms()[i].first, h.terms()[j].first, MonomialOrder::Global) > 0;
            });
        return idx;
    }

    MonomialOrder ord_;
};

struct Pair {
    std::size_t i, j;
    int lcm_degree;
    std::size_t seq;
};

BasisData compute_basis(const std::vector<LocalPoly>& gens, MonomialOrder ord)
{
    Engine eng(ord);
    std::vector<LocalPoly> S;
    std::vector<Pair> pairs;
    std::size_t seq = 0;

    auto lead = [&](const LocalPoly& p) { return p.leading(ord).first; };

    auto retruncate = [&]() {
        std::vector<Monomial> leads;
        for (const auto& s : S)
            leads.push_back(lead(s));
        Staircase st = staircase(leads);
        if (!st.finite || (eng.trunc && *eng.trunc <= st.max_degree))
            return;
        if (ord == MonomialOrder::Local) {
            eng.trunc = st.max_degree;
            for (auto& s : S)
                s = eng.cut_element(s);
        }
    };

    auto add = [&](LocalPoly h) {
        h = monic(h, ord);
        const Monomial lh = lead(h);
        const std::size_t k = S.size();
        S.push_back(std::move(h));
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial li = lead(S[i]);
            if (std::min(li.a, lh.a) == 0 && std::min(li.b, lh.b) == 0)
                continue;  // coprime leading monomials
            pairs.push_back({i, k, lcm(li, lh).degree(), seq++});
        }
        retruncate();
    };

    for (const auto& g : gens) {
        LocalPoly h = eng.weak_nf(g, S);
        if (!h.is_zero())
            add(std::move(h));
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& p, const Pair& q) {
            if (p.lcm_degree != q.lcm_degree)
                return p.lcm_degree < q.lcm_degree;
            return p.seq < q.seq;
        });
        Pair pr = *it;
        pairs.erase(it);
        if (eng.trunc && pr.lcm_degree > *eng.trunc)
            continue;
        const LocalPoly& gi = S[pr.i];
        const LocalPoly& gj = S[pr.j];
        const Monomial li = lead(gi), lj = lead(gj), L = lcm(li, lj);
        LocalPoly sp = LocalPoly::merge(gi.shifted(L / li), Rational(-1), L / lj, gj);
        LocalPoly h = eng.weak_nf(sp, S);
        if (!h.is_zero())
            add(std::move(h));
    }

    // minimalize
    std::vector<LocalPoly> minimal;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const Monomial li = lead(S[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial lj = lead(S[j]);
            if (lj.divides(li) && (!(lj == li) || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(S[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const LocalPoly& p, const LocalPoly& q) { return compare(lead(p), lead(q), ord) > 0; });

    BasisData out;
    for (const auto& m : minimal)
        out.leads.push_back(lead(m));
    Staircase st = staircase(out.leads);
    if (st.finite)
        out.corner_degree = st.max_degree;

    // tail reduction where a full normal form is available
    const bool full = ord == MonomialOrder::Global || st.finite;
    if (ord == MonomialOrder::Local && st.finite)
        eng.trunc = st.max_degree;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        LocalPoly g = eng.cut_element(minimal[i]);
        if (full) {
            const auto& lt = g.leading(ord);
            LocalPoly head = LocalPoly::term(lt.first, lt.second);
            std::vector<LocalPoly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            g = head + eng.full_nf(g - head, others);
        }
        out.elements.push_back(monic(g, ord));
    }
    return out;
}

Engine engine_for(const IdealPresentation& I)
{
    Engine eng(I.order());
    if (I.order() == MonomialOrder::Local)
        eng.trunc = I.basis().corner_degree;
    return eng;
}

}  // namespace

BasisData make_basis_data(std::vector<LocalPoly> elements, MonomialOrder order)
{
    auto lead = [&](const LocalPoly& p) { return p.leading(order).first; };
    std::vector<LocalPoly> kept;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].is_zero())
            continue;
        const Monomial li = lead(elements[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < elements.size() && !redundant; ++j) {
            if (i == j || elements[j].is_zero())
                continue;
            const Monomial lj = lead(elements[j]);
            if (lj.divides(li) && (!(lj == li) || j < i))
                redundant = true;
        }
        if (!redundant)
            kept.push_back(monic(elements[i], order));
    }
    std::sort(kept.begin(), kept.end(),
              [&](const LocalPoly& p, const LocalPoly& q) { return compare(lead(p), lead(q), order) > 0; });
    BasisData out;
    for (const auto& k : kept)
        out.leads.push_back(lead(k));
    Staircase st = staircase(out.leads);
    if (st.finite)
        out.corner_degree = st.max_degree;
    out.elements = std::move(kept);
    return out;
}

IdealPresentation::IdealPresentation(std::vector<LocalPoly> generators, MonomialOrder order)
    : order_(order)
{
    for (auto& g : generators)
        if (!g.is_zero())
            generators_.push_back(std::move(g));
}

IdealPresentation IdealPresentation::with_known_basis(std::vector<LocalPoly> generators, BasisData basis,
                                                      MonomialOrder order)
{
    IdealPresentation I(std::move(generators), order);
    I.basis_ = std::make_shared<const BasisData>(std::move(basis));
    return I;
}

const BasisData& IdealPresentation::basis() const
{
    if (!basis_)
        basis_ = std::make_shared<const BasisData>(compute_basis(generators_, order_));
    return *basis_;
}

IdealPresentation operator+(const IdealPresentation& I, const IdealPresentation& J)
{
    std::vector<LocalPoly> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return IdealPresentation(std::move(g), I.order());
}

IdealPresentation standard_basis(const IdealPresentation& I)
{
    I.basis();
    return I;
}

LocalPoly normal_form(const LocalPoly& g, const IdealPresentation& I)
{
    const BasisData& B = I.basis();
    Engine eng = engine_for(I);
    if (I.order() == MonomialOrder::Global || B.corner_degree)
        return eng.full_nf(g, B.elements);
    return eng.weak_nf(g, B.elements);
}

bool contains(const IdealPresentation& I, const LocalPoly& g)
{
    return normal_form(g, I).is_zero();
}

std::optional<long> colength(const IdealPresentation& I)
{
    Staircase st = staircase(I.basis().leads);
    if (!st.finite)
        return std::nullopt;
    return st.colength;
}

std::vector<Monomial> quotient_monomials(const IdealPresentation& I)
{
    Staircase st = staircase(I.basis().leads);
    if (!st.finite)
        throw Error(ErrorCode::InfiniteColength, "quotient has infinite dimension");
    std::vector<Monomial> out;
    for (int a = 0; a < static_cast<int>(st.heights.size()); ++a)
        for (int b = 0; b < st.heights[a]; ++b)
            out.push_back({a, b});
    std::sort(out.begin(), out.end(),
              [&](const Monomial& p, const Monomial& q) { return compare(p, q, I.order()) > 0; });
    return out;
}

Monomial highest_corner(const IdealPresentation& I)
{
    Staircase st = staircase(I.basis().leads);
    if (!st.finite)
        throw Error(ErrorCode::InfiniteColength, "no highest corner: quotient has infinite dimension");
    if (st.colength == 0)
        throw Error(ErrorCode::InvalidArgument, "no highest corner: unit ideal");
    // among standard monomials of maximal degree, the one with least x exponent
    for (int a = 0; a < static_cast<int>(st.heights.size()); ++a)
        if (st.heights[a] > 0 && a + st.heights[a] - 1 == st.max_degree)
            return {a, st.heights[a] - 1};
    throw Error(ErrorCode::InternalInconsistency, "staircase without corner");
}

bool ideal_contains(const IdealPresentation& J, const IdealPresentation& I)
{
    for (const auto& g : I.generators())
        if (!contains(J, g))
            return false;
    return true;
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J)
{
    return ideal_contains(J, I) && ideal_contains(I, J);
}

IdealPresentation jacobian_ideal(const LocalPoly& f)
{
    return IdealPresentation({f.diff_x(), f.diff_y()});
}

IdealPresentation tjurina_ideal(const LocalPoly& f)
{
    return IdealPresentation({f, f.diff_x(), f.diff_y()});
}

IdealPresentation fixed_tjurina_ideal(const LocalPoly& f)
{
    const LocalPoly fx = f.diff_x(), fy = f.diff_y();
    const Monomial X{1, 0}, Y{0, 1};
    return IdealPresentation({f, fx.shifted(X), fx.shifted(Y), fy.shifted(X), fy.shifted(Y)});
}

long milnor_number(const LocalPoly& f)
{
    auto c = colength(jacobian_ideal(f));
    if (!c)
        throw Error(ErrorCode::NonIsolated, "Milnor number is infinite: singularity is not isolated");
    return *c;
}

long tjurina_number(const LocalPoly& f)
{
    auto c = colength(tjurina_ideal(f));
    if (!c)
        throw Error(ErrorCode::NonIsolated, "Tjurina number is infinite: singularity is not isolated");
    return *c;
}

std::vector<Monomial> monomials_of_degree(int d)
{
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        out.push_back({a, d - a});
    return out;
}

std::vector<LocalPoly> global_rereduce(const std::vector<LocalPoly>& candidates, const IdealPresentation& I, int d)
{
    std::vector<LocalPoly> gens = I.generators();
    for (const auto& m : monomials_of_degree(d + 1))
        gens.push_back(LocalPoly::term(m, Rational(1)));
    IdealPresentation T(std::move(gens), MonomialOrder::Global);
    std::vector<LocalPoly> out;
    for (const auto& c : candidates)
        out.push_back(normal_form(c, T));
    return out;
}

}  // namespace esdef
