#pragma once

#include "esdef/poly.hpp"
#include "esdef/upoly.hpp"

#include <string>
#include <vector>

namespace esdef {

enum class ChartKind {
    Root,
    Affine,    // (u, v) = (u1, u1 (c + v1))
    Infinity,  // (u, v) = (a b, a), new coordinates (a, b)
};

/// An infinitely near point, or rather the class of its Galois conjugates:
/// its coordinates live in `field` and it stands for `weight` geometric
/// points over the origin.
///
/// Local coordinates (u, v) are centred at the point. The exceptional divisor
/// of the parent is {u = 0}; a second divisor through the point, if any, is
/// {v = 0}.
struct InfinitelyNearPoint {
    int id = 0;
    int level = 0;
    int parent = -1;
    TowerPtr field;
    std::size_t weight = 1;

    ChartKind chart = ChartKind::Root;
    FieldElement direction;  // c for affine charts
    UniPoly direction_poly;  // minimal polynomial of c over the parent field

    int m = 0;        // strict transform multiplicity
    int m_hat = 0;    // total transform multiplicity
    int m_tilde = 0;  // reduced total transform multiplicity

    std::vector<int> proximate_to;  // parent first
    int owner_u = -1;               // divisor {u = 0}
    int owner_v = -1;               // divisor {v = 0}

    bool essential = true;  // false: terminal leaf marker (a node)
    std::vector<int> children;

    TowerPoly strict;  // strict transform in (u, v)

    bool satellite() const { return proximate_to.size() == 2; }
    bool free() const { return proximate_to.size() == 1; }
};

/// Essential points and terminal markers, numbered breadth first so ids grow
/// with the level. Empty for a smooth germ.
struct EssentialTree {
    LocalPoly f;
    std::vector<InfinitelyNearPoint> points;

    bool smooth() const { return points.empty(); }
    std::vector<int> essential_ids() const;
    const InfinitelyNearPoint& point(int id) const { return points.at(static_cast<std::size_t>(id)); }
};

struct ResolveOptions {
    int depth_cap = 64;
};

/// Minimal good embedded resolution. NotLocal if f(0) != 0, NotReduced if the
/// Tjurina number is infinite, NotReducedSuspected when the depth cap is hit.
EssentialTree resolve(const LocalPoly& f, const ResolveOptions& options = {});

/// m-hat by the recursion m-hat_q = m_q + sum over points q is proximate to.
std::vector<int> total_transform_multiplicities(const EssentialTree& tree);

/// Composite chart map (x, y) = Phi_q(u, v), truncated at degree max_deg.
struct ChartMap {
    TowerPoly X;
    TowerPoly Y;
};
ChartMap chart_map(const EssentialTree& tree, int id, int max_deg);

/// Applies one chart step (the chart that created `child`) to a polynomial in
/// the parent's coordinates, truncated at max_deg (negative: exact).
TowerPoly apply_chart(const TowerPoly& p, const InfinitelyNearPoint& child, int max_deg);

/// Weighted count of free essential non-root points.
long free_vertex_count(const EssentialTree& tree);
long satellite_count(const EssentialTree& tree);

/// Sum over essential points of weight * m (m + 1) / 2.
long degree_formula(const EssentialTree& tree);

struct ClusterGraph {
    std::vector<std::pair<int, int>> edges;      // (parent, child), essential only
    std::vector<std::pair<int, int>> proximities;  // (q, p) with q proximate to p, p not the parent
    std::vector<int> multiplicities;             // indexed like tree.points
    std::string encoding;
};

/// Canonical encoding: child multisets sorted recursively, labels m_q and the
/// level offset of the non-parent proximity of satellites. Conjugate classes
/// contribute one child per geometric point.
ClusterGraph cluster_graph(const EssentialTree& tree);

/// Tree-consistency checks (proximity equality with weights, m-hat recursion
/// against direct pullback, m-tilde - m in {1, 2}); returns the failures.
struct TreeCheck {
    std::string name;
    bool ok;
    std::string detail;
};
std::vector<TreeCheck> validate_tree(const EssentialTree& tree);

}  // namespace esdef
