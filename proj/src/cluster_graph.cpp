#include "esdef/resolution.hpp"

#include <algorithm>

namespace esdef {

namespace {

std::string encode(const EssentialTree& tree, int id)
{
    const auto& q = tree.point(id);
    std::string label = std::to_string(q.m);
    if (q.satellite())
        label += "s" + std::to_string(q.level - tree.point(q.proximate_to[1]).level);
    std::vector<std::string> kids;
    for (int c : q.children) {
        const auto& child = tree.point(c);
        if (!child.essential)
            continue;
        const std::string e = encode(tree, c);
        for (std::size_t k = 0; k < child.weight / q.weight; ++k)
            kids.push_back(e);
    }
    std::sort(kids.begin(), kids.end());
    std::string out = label + "(";
    for (std::size_t i = 0; i < kids.size(); ++i)
        out += (i ? "," : "") + kids[i];
    return out + ")";
}

}  // namespace

ClusterGraph cluster_graph(const EssentialTree& tree)
{
    ClusterGraph g;
    for (const auto& p : tree.points) {
        g.multiplicities.push_back(p.m);
        if (!p.essential)
            continue;
        if (p.parent >= 0)
            g.edges.emplace_back(p.parent, p.id);
        if (p.satellite())
            g.proximities.emplace_back(p.id, p.proximate_to[1]);
    }
    g.encoding = tree.smooth() ? "()" : encode(tree, 0);
    return g;
}

}  // namespace esdef
