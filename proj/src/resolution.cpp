#include "esdef/resolution.hpp"

#include "esdef/errors.hpp"
#include "esdef/factor.hpp"
#include "esdef/standard_basis.hpp"

#include <deque>
#include <map>

namespace esdef {

std::vector<int> EssentialTree::essential_ids() const
{
    std::vector<int> out;
    for (const auto& p : points)
        if (p.essential)
            out.push_back(p.id);
    return out;
}

TowerPoly apply_chart(const TowerPoly& p, const InfinitelyNearPoint& child, int max_deg)
{
    std::vector<TowerPoly::Term> acc;
    if (child.chart == ChartKind::Infinity) {
        // u^i v^j -> a^(i+j) b^i
        for (const auto& [m, c] : p.terms()) {
            Monomial n{m.a + m.b, m.a};
            if (max_deg < 0 || n.degree() <= max_deg)
                acc.emplace_back(n, c);
        }
        return TowerPoly::from_terms(std::move(acc));
    }
    if (child.chart != ChartKind::Affine)
        return p;
    // u^a v^b -> u1^(a+b) (c + v1)^b; group by a + b and shift each group
    std::map<int, std::vector<FieldElement>> groups;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.a + m.b;
        if (max_deg >= 0 && e > max_deg)
            continue;
        auto& g = groups[e];
        if (g.size() <= static_cast<std::size_t>(m.b))
            g.resize(static_cast<std::size_t>(m.b) + 1);
        g[static_cast<std::size_t>(m.b)] += c;
    }
    for (auto& [e, coeffs] : groups) {
        UniPoly w(std::move(coeffs));
        UniPoly shifted = child.direction.is_zero() ? w : w.shift(child.direction);
        for (std::size_t k = 0; k < shifted.coeffs().size(); ++k) {
            if (max_deg >= 0 && e + static_cast<int>(k) > max_deg)
                break;
            if (!shifted.coeffs()[k].is_zero())
                acc.emplace_back(Monomial{e, static_cast<int>(k)}, shifted.coeffs()[k]);
        }
    }
    return TowerPoly::from_terms(std::move(acc));
}

namespace {

TowerPoly divide_by_u_power(const TowerPoly& p, int m)
{
    std::vector<TowerPoly::Term> acc;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.a < m)
            throw Error(ErrorCode::InternalInconsistency, "strict transform not divisible by the exceptional divisor");
        acc.emplace_back(Monomial{mono.a - m, mono.b}, c);
    }
    return TowerPoly::from_terms(std::move(acc));
}

bool is_node(const TowerPoly& strict, bool div_u, bool div_v)
{
    TowerPoly h = strict;
    if (div_u)
        h = h.shifted({1, 0});
    if (div_v)
        h = h.shifted({0, 1});
    if (*h.order() != 2)
        return false;
    const FieldElement a = h.coeff({2, 0}), b = h.coeff({1, 1}), c = h.coeff({0, 2});
    return !(b * b - FieldElement(4) * a * c).is_zero();
}

}  // namespace

EssentialTree resolve(const LocalPoly& f, const ResolveOptions& options)
{
    EssentialTree tree;
    tree.f = f;
    if (f.is_zero())
        throw Error(ErrorCode::NotReduced, "the zero polynomial is not reduced");
    if (*f.order() == 0)
        throw Error(ErrorCode::NotLocal, "f does not vanish at the origin");
    if (*f.order() == 1)
        return tree;
    if (!colength(tjurina_ideal(f)))
        throw Error(ErrorCode::NotReduced, "f is not reduced (non-isolated singularity at the origin)");

    InfinitelyNearPoint root;
    root.strict = to_tower(f);
    tree.points.push_back(std::move(root));
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        InfinitelyNearPoint& q = tree.points[static_cast<std::size_t>(id)];
        q.m = *q.strict.order();
        const int ndiv = (q.owner_u >= 0) + (q.owner_v >= 0);
        q.m_tilde = q.m + ndiv;
        if (q.parent >= 0 && q.m_tilde == 2 && is_node(q.strict, q.owner_u >= 0, q.owner_v >= 0)) {
            q.essential = false;
            continue;
        }
        if (q.level >= options.depth_cap)
            throw Error(ErrorCode::NotReducedSuspected,
                        "resolution exceeded " + std::to_string(options.depth_cap) + " levels; input is probably not reduced");

        // tangent directions: h_m(1, t) and the point u = 0
        const TowerPoly hm = q.strict.homogeneous_part(q.m);
        std::vector<FieldElement> pc(static_cast<std::size_t>(q.m) + 1);
        for (const auto& [mono, c] : hm.terms())
            pc[static_cast<std::size_t>(mono.b)] = c;
        const bool at_infinity = pc.back().is_zero();
        UniPoly P(pc);

        struct Pending {
            ChartKind kind;
            UniPoly poly;
            AdjoinedRoot root;
        };
        std::vector<Pending> pending;
        if (P.degree() >= 1)
            for (const auto& fac : factor_univariate(P, q.field))
                pending.push_back({ChartKind::Affine, fac.poly, adjoin_root(q.field, fac.poly)});
        if (at_infinity)
            pending.push_back({ChartKind::Infinity, UniPoly(), {q.field, FieldElement()}});

        // copy what the children need before tree.points grows
        const int q_level = q.level, q_owner_u = q.owner_u, q_owner_v = q.owner_v, q_m = q.m;
        const TowerPoly q_strict = q.strict;
        for (auto& pd : pending) {
            InfinitelyNearPoint child;
            child.id = static_cast<int>(tree.points.size());
            child.level = q_level + 1;
            child.parent = id;
            child.field = pd.root.tower;
            child.weight = child.field ? child.field->degree() : 1;
            child.chart = pd.kind;
            child.direction = pd.root.root;
            child.direction_poly = pd.poly;
            child.owner_u = id;
            if (pd.kind == ChartKind::Affine)
                child.owner_v = child.direction.is_zero() ? q_owner_v : -1;
            else
                child.owner_v = q_owner_u;
            child.proximate_to.push_back(id);
            if (child.owner_v >= 0)
                child.proximate_to.push_back(child.owner_v);
            child.strict = divide_by_u_power(apply_chart(q_strict, child, -1), q_m);
            if (child.strict.is_zero() || *child.strict.order() < 1)
                throw Error(ErrorCode::InternalInconsistency, "strict transform misses a tangent direction");
            tree.points[static_cast<std::size_t>(id)].children.push_back(child.id);
            queue.push_back(child.id);
            tree.points.push_back(std::move(child));
        }
    }

    auto mh = total_transform_multiplicities(tree);
    for (auto& p : tree.points)
        p.m_hat = mh[static_cast<std::size_t>(p.id)];
    return tree;
}

std::vector<int> total_transform_multiplicities(const EssentialTree& tree)
{
    std::vector<int> mh(tree.points.size());
    for (const auto& p : tree.points) {
        int v = p.m;
        for (int t : p.proximate_to)
            v += mh[static_cast<std::size_t>(t)];
        mh[static_cast<std::size_t>(p.id)] = v;
    }
    return mh;
}

ChartMap chart_map(const EssentialTree& tree, int id, int max_deg)
{
    std::vector<int> chain;
    for (int q = id; q >= 0; q = tree.point(q).parent)
        chain.push_back(q);
    ChartMap map{TowerPoly::x().truncated(max_deg < 0 ? 1 : max_deg),
                 TowerPoly::y().truncated(max_deg < 0 ? 1 : max_deg)};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const auto& p = tree.point(*it);
        if (p.chart == ChartKind::Root)
            continue;
        map.X = apply_chart(map.X, p, max_deg);
        map.Y = apply_chart(map.Y, p, max_deg);
    }
    return map;
}

long free_vertex_count(const EssentialTree& tree)
{
    long n = 0;
    for (const auto& p : tree.points)
        if (p.essential && p.parent >= 0 && p.free())
            n += static_cast<long>(p.weight);
    return n;
}

long satellite_count(const EssentialTree& tree)
{
    long n = 0;
    for (const auto& p : tree.points)
        if (p.essential && p.satellite())
            n += static_cast<long>(p.weight);
    return n;
}

long degree_formula(const EssentialTree& tree)
{
    long n = 0;
    for (const auto& p : tree.points)
        if (p.essential)
            n += static_cast<long>(p.weight) * p.m * (p.m + 1) / 2;
    return n;
}

std::vector<TreeCheck> validate_tree(const EssentialTree& tree)
{
    std::vector<TreeCheck> out;
    if (tree.smooth())
        return out;
    const auto mh = total_transform_multiplicities(tree);
    for (const auto& p : tree.points) {
        if (!p.essential)
            continue;
        const std::string qn = "q" + std::to_string(p.id);

        // weighted proximity equality
        long sum = 0;
        for (const auto& q : tree.points)
            for (int t : q.proximate_to)
                if (t == p.id)
                    sum += static_cast<long>(q.weight) * q.m;
        const long lhs = static_cast<long>(p.weight) * p.m;
        out.push_back({"proximity equality at " + qn, lhs == sum,
                       "m*w = " + std::to_string(lhs) + ", sum over proximate points = " + std::to_string(sum)});

        // m-hat: stored value, recursion, and the exact pullback of f
        ChartMap phi = chart_map(tree, p.id, -1);
        TowerPoly total = compose(to_tower(tree.f), phi.X, phi.Y, -1);
        const int direct = total.is_zero() ? -1 : *total.order();
        const bool mh_ok = direct == mh[static_cast<std::size_t>(p.id)] && p.m_hat == direct;
        out.push_back({"m-hat recursion at " + qn, mh_ok,
                       "recursion " + std::to_string(mh[static_cast<std::size_t>(p.id)]) + ", stored " +
                           std::to_string(p.m_hat) + ", pullback " + std::to_string(direct)});

        // m-tilde from the divisor exponents of the pullback
        if (p.parent >= 0) {
            int umin = 1 << 30, vmin = 1 << 30;
            for (const auto& [mono, c] : total.terms()) {
                umin = std::min(umin, mono.a);
                vmin = std::min(vmin, mono.b);
            }
            if (p.owner_v < 0)
                vmin = 0;  // {v = 0} is no divisor; a factor v belongs to the strict transform
            const int strict_order = direct - umin - vmin;
            const int mt = strict_order + (umin > 0) + (vmin > 0);
            const int gap = mt - p.m;
            const bool ok = mt == p.m_tilde && strict_order == p.m && (gap == 1 || gap == 2) &&
                            (gap == 2) == p.satellite();
            out.push_back({"m-tilde at " + qn, ok,
                           "m = " + std::to_string(p.m) + ", m-tilde = " + std::to_string(mt) +
                               (p.satellite() ? ", satellite" : ", free")});
        }
    }
    for (const auto& p : tree.points)
        if (!p.essential)
            out.push_back({"terminal marker q" + std::to_string(p.id) + " is free", !p.satellite(),
                           p.satellite() ? "marker has two proximities" : ""});
    return out;
}

}  // namespace esdef
