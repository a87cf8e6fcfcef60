#include "esdef/ideals.hpp"

#include "esdef/errors.hpp"

#include <algorithm>
#include <map>

namespace esdef {

namespace {

std::vector<Monomial> monomials_up_to(int D)
{
    std::vector<Monomial> out;
    for (int k = 0; k <= D; ++k)
        for (const auto& m : monomials_of_degree(k))
            out.push_back(m);
    return out;
}

// Accumulates K-valued rows indexed by the target Taylor monomial.
class RowCollector {
public:
    void add(const Monomial& target, std::size_t column, const FieldElement& value)
    {
        if (!value.is_zero())
            rows_[{target.degree(), -target.a}].emplace_back(column, value);
    }

    void flush_into(std::vector<SparseRow>& out, const TowerPtr& K)
    {
        const std::size_t deg = K ? K->degree() : 1;
        for (auto& [key, entries] : rows_) {
            std::sort(entries.begin(), entries.end(),
                      [](const auto& s, const auto& t) { return s.first < t.first; });
            std::vector<SparseRow> split(deg);
            for (std::size_t i = 0; i < entries.size();) {
                std::size_t j = i;
                FieldElement sum;
                while (j < entries.size() && entries[j].first == entries[i].first)
                    sum += entries[j++].second;
                const FieldElement e = K ? sum.embed(K) : sum;
                for (std::size_t k = 0; k < deg; ++k)
                    if (!is_zero(e.coeffs()[k]))
                        split[k].emplace_back(entries[i].first, e.coeffs()[k]);
                i = j;
            }
            for (auto& r : split)
                if (!r.empty())
                    out.push_back(std::move(r));
        }
        rows_.clear();
    }

private:
    std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, FieldElement>>> rows_;
};

int order_or(const TowerPoly& p, int fallback)
{
    return p.is_zero() ? fallback : *p.order();
}

// Pullbacks of the g monomials at one point, Taylor coefficients of degree
// < v, written into the collector with column offset `base`.
void add_g_conditions(const EssentialTree& tree, int id, int v, const std::vector<Monomial>& gm,
                      std::size_t base, RowCollector& rc)
{
    const int cut = v - 1;
    const ChartMap phi = chart_map(tree, id, cut);
    const int ox = order_or(phi.X, v), oy = order_or(phi.Y, v);
    int imax = 0, jmax = 0;
    for (const auto& m : gm) {
        if (m.a * ox + m.b * oy >= v)
            continue;
        imax = std::max(imax, m.a);
        jmax = std::max(jmax, m.b);
    }
    std::vector<TowerPoly> xp{TowerPoly(FieldElement(1))}, yp{TowerPoly(FieldElement(1))};
    for (int i = 1; i <= imax; ++i)
        xp.push_back(TowerPoly::mul_truncated(xp.back(), phi.X, cut));
    for (int j = 1; j <= jmax; ++j)
        yp.push_back(TowerPoly::mul_truncated(yp.back(), phi.Y, cut));
    for (std::size_t col = 0; col < gm.size(); ++col) {
        const Monomial& m = gm[col];
        if (m.a * ox + m.b * oy >= v)
            continue;
        const TowerPoly P = TowerPoly::mul_truncated(xp[static_cast<std::size_t>(m.a)], yp[static_cast<std::size_t>(m.b)], cut);
        for (const auto& [t, c] : P.terms())
            rc.add(t, base + col, c);
    }
}

void check_virtual(const EssentialTree& tree, const std::vector<int>& virtual_mult)
{
    if (virtual_mult.size() != tree.points.size())
        throw Error(ErrorCode::InvalidTree, "virtual multiplicities do not match the tree");
    for (const auto& p : tree.points)
        if (p.essential && virtual_mult[static_cast<std::size_t>(p.id)] < 1)
            throw Error(ErrorCode::InvalidTree, "virtual multiplicity must be positive at q" + std::to_string(p.id));
}

}  // namespace

int minimal_truncation(const EssentialTree& tree, const std::vector<int>& virtual_mult)
{
    check_virtual(tree, virtual_mult);
    int D = 0;
    for (const auto& p : tree.points) {
        if (!p.essential)
            continue;
        const int v = virtual_mult[static_cast<std::size_t>(p.id)];
        const ChartMap phi = chart_map(tree, p.id, v - 1);
        const int o = std::min(order_or(phi.X, v), order_or(phi.Y, v));
        // (k + 1) * o >= v
        D = std::max(D, (v + o - 1) / o - 1);
    }
    return D;
}

ConditionSystem cluster_conditions(const EssentialTree& tree, const std::vector<int>& virtual_mult, int D)
{
    check_virtual(tree, virtual_mult);
    ConditionSystem sys;
    sys.D = D;
    sys.g_monomials = monomials_up_to(D);
    for (const auto& p : tree.points) {
        if (!p.essential)
            continue;
        RowCollector rc;
        add_g_conditions(tree, p.id, virtual_mult[static_cast<std::size_t>(p.id)], sys.g_monomials, 0, rc);
        rc.flush_into(sys.rows, p.field);
    }
    return sys;
}

ConditionSystem es_fix_conditions(const EssentialTree& tree, int D)
{
    ConditionSystem sys;
    sys.D = D;
    sys.g_monomials = monomials_up_to(D);
    if (tree.smooth())
        return sys;

    // offset unknowns
    std::map<int, std::size_t> first_column;
    for (const auto& p : tree.points) {
        if (!p.essential || p.parent < 0 || !p.free())
            continue;
        first_column[p.id] = sys.offsets.size();
        for (std::size_t k = 0; k < p.weight; ++k)
            sys.offsets.push_back({p.id, k});
    }
    const std::size_t base = sys.offsets.size();

    int N = 0;
    for (const auto& p : tree.points)
        if (p.essential)
            N = std::max(N, p.m_hat - 1);

    // total transform of f and its first-order offset derivatives per point
    struct Transform {
        TowerPoly fhat;
        std::map<int, TowerPoly> deriv;
    };
    std::map<int, Transform> tf;
    tf[0].fhat = to_tower(tree.f).truncated(N);
    for (const auto& p : tree.points) {
        if (!p.essential)
            continue;
        if (p.parent >= 0) {
            const Transform& par = tf.at(p.parent);
            Transform t;
            t.fhat = apply_chart(par.fhat, p, N);
            for (const auto& [j, d] : par.deriv)
                t.deriv[j] = apply_chart(d, p, N);
            if (p.free()) {
                const TowerPoly grad = p.chart == ChartKind::Affine ? par.fhat.diff_y() : par.fhat.diff_x();
                t.deriv[p.id] = apply_chart(grad, p, N).shifted({1, 0}).truncated(N);
            }
            tf[p.id] = std::move(t);
        }

        RowCollector rc;
        add_g_conditions(tree, p.id, p.m_hat, sys.g_monomials, base, rc);
        for (const auto& [j, d] : tf.at(p.id).deriv) {
            const auto& owner = tree.point(j);
            const std::size_t col0 = first_column.at(j);
            for (std::size_t k = 0; k < owner.weight; ++k) {
                const FieldElement beta = FieldElement::basis(owner.field, k);
                for (const auto& [t, c] : d.terms()) {
                    if (t.degree() >= p.m_hat)
                        break;
                    rc.add(t, col0 + k, beta * c);
                }
            }
        }
        rc.flush_into(sys.rows, p.field);
    }
    return sys;
}

TruncatedIdeal solve_conditions(const ConditionSystem& sys)
{
    const std::size_t n_off = sys.offsets.size();
    const std::size_t n_g = sys.g_monomials.size();
    RowEchelon full(sys.columns());
    for (const auto& r : sys.rows)
        full.add_row(r);
    full.reduce_fully();

    // rows free of offsets constrain g alone
    RowEchelon gsys(n_g);
    for (const auto& r : full.rows()) {
        if (r.front().first < n_off)
            continue;
        SparseRow s;
        for (const auto& [c, v] : r)
            s.emplace_back(c - n_off, v);
        gsys.add_row(std::move(s));
    }
    gsys.reduce_fully();
    std::vector<std::size_t> all(n_g);
    for (std::size_t i = 0; i < n_g; ++i)
        all[i] = i;
    RowEchelon kernel(n_g);
    for (auto& v : gsys.kernel_basis(all))
        kernel.add_row(std::move(v));
    kernel.reduce_fully();

    std::vector<LocalPoly> elems;
    const long dim = static_cast<long>(kernel.rank());
    for (const auto& r : kernel.rows()) {
        std::vector<LocalPoly::Term> t;
        for (const auto& [c, v] : r)
            t.emplace_back(sys.g_monomials[c], v);
        elems.push_back(LocalPoly::from_terms(std::move(t)));
    }
    for (const auto& m : monomials_of_degree(sys.D + 1))
        elems.push_back(LocalPoly::term(m, Rational(1)));
    BasisData bd = make_basis_data(std::move(elems));
    std::vector<LocalPoly> gens = bd.elements;
    return {IdealPresentation::with_known_basis(std::move(gens), std::move(bd)), sys.D, dim};
}

}  // namespace esdef
