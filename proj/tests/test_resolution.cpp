#include <doctest.h>

#include "esdef/errors.hpp"
#include "esdef/parse.hpp"
#include "esdef/resolution.hpp"

using namespace esdef;

namespace {

const char* big = "(y3+x7)*(y3+x10)";

std::vector<int> essential_field(const EssentialTree& t, int InfinitelyNearPoint::*field)
{
    std::vector<int> out;
    for (const auto& p : t.points)
        if (p.essential)
            out.push_back(p.*field);
    return out;
}

int markers(const EssentialTree& t)
{
    int n = 0;
    for (const auto& p : t.points)
        n += p.essential ? 0 : static_cast<int>(p.weight);
    return n;
}

ErrorCode resolve_error(const char* s, int cap = 64)
{
    try {
        resolve(parse_poly(s), ResolveOptions{cap});
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("node: one essential point and two markers")
{
    const EssentialTree t = resolve(parse_poly("xy"));
    CHECK(essential_field(t, &InfinitelyNearPoint::m) == std::vector<int>{2});
    CHECK(markers(t) == 2);
    for (const auto& p : t.points)
        if (!p.essential)
            CHECK(p.level == 1);
    CHECK(free_vertex_count(t) == 0);
    CHECK(degree_formula(t) == 3);
    CHECK(cluster_graph(t).encoding == "2()");
}

TEST_CASE("cusp matches the hand blow-up")
{
    // chart y = x y1 gives x^2 (y1^2 - x); chart x = x2 y2, y1 = y2 gives a triple point
    const EssentialTree t = resolve(parse_poly("y2-x3"));
    REQUIRE(t.essential_ids().size() == 3);
    CHECK(essential_field(t, &InfinitelyNearPoint::m) == std::vector<int>{2, 1, 1});
    CHECK(essential_field(t, &InfinitelyNearPoint::m_hat) == std::vector<int>{2, 3, 6});
    const auto& q1 = t.point(1);
    const auto& q2 = t.point(2);
    CHECK(q1.free());
    CHECK(q2.satellite());
    CHECK(q2.proximate_to == std::vector<int>{1, 0});
    CHECK(q2.chart == ChartKind::Infinity);
    CHECK(q2.m_tilde == 3);
    CHECK(markers(t) == 1);
    CHECK(free_vertex_count(t) == 1);
    CHECK(satellite_count(t) == 1);
    CHECK(degree_formula(t) == 5);
    CHECK(cluster_graph(t).encoding == "2(1(1s2()))");
}

TEST_CASE("ordinary singular points need one blow-up")
{
    for (const char* s : {"x3-xy2", "x3+y3", "x4+y4", "x5+y5", "x3-xy2+y7"}) {
        const EssentialTree t = resolve(parse_poly(s));
        const int m = t.point(0).m;
        CHECK_MESSAGE(t.essential_ids().size() == 1, s);
        CHECK_MESSAGE(markers(t) == m, s);
        CHECK_MESSAGE(degree_formula(t) == m * (m + 1) / 2, s);
    }
}

TEST_CASE("conjugate directions share one class point")
{
    const EssentialTree t = resolve(parse_poly("x2y+y3"));
    bool found = false;
    for (const auto& p : t.points) {
        if (p.weight == 2) {
            found = true;
            CHECK(p.field->degree() == 2);
            CHECK(p.direction_poly.eval(p.direction).is_zero());
            CHECK(p.direction_poly.degree() == 2);
        }
    }
    CHECK(found);
    CHECK(cluster_graph(t).encoding == "3()");
}

TEST_CASE("big example tree")
{
    const EssentialTree t = resolve(parse_poly(big));
    CHECK(essential_field(t, &InfinitelyNearPoint::m) == std::vector<int>{6, 6, 4, 1, 1, 1, 1, 1});
    CHECK(essential_field(t, &InfinitelyNearPoint::m_hat) == std::vector<int>{6, 12, 16, 17, 29, 34, 42, 51});
    CHECK(total_transform_multiplicities(t) ==
          std::vector<int>{6, 12, 16, 17, 29, 34, 42, 51, 43, 52});
    CHECK(markers(t) == 2);
    CHECK(free_vertex_count(t) == 3);
    CHECK(degree_formula(t) == 57);
    CHECK(cluster_graph(t).encoding == "6(6(4(1(1s2(1s3())),1s2(1s3()))))");
    for (const auto& c : validate_tree(t))
        CHECK_MESSAGE(c.ok, (c.name + ": " + c.detail));
}

TEST_CASE("tree consistency on a range of germs")
{
    for (const char* s : {"y2-x5", "y2-x7", "x2y+y4", "x3+y4", "x3+xy3", "x3+y5", "x4-y5", "(y2-x3)^2-4x5y-x7",
                          "(y2-x3)*(y2-x5)", "(x2-y3)*(y2-x3)", "y4-x2y2+x5", "(y2+x2)^2+x5", "x4+x2y2+y5"}) {
        const EssentialTree t = resolve(parse_poly(s));
        for (const auto& c : validate_tree(t))
            CHECK_MESSAGE(c.ok, (std::string(s) + " " + c.name + ": " + c.detail));
        for (const auto& p : t.points) {
            // ids are breadth first; fields only grow along a branch
            if (p.parent < 0)
                continue;
            const auto& par = t.point(p.parent);
            CHECK(par.level + 1 == p.level);
            CHECK(par.id < p.id);
            if (par.field)
                CHECK(par.field->is_prefix_of(*p.field));
            CHECK(p.weight == (p.field ? p.field->degree() : 1));
            CHECK(p.weight % par.weight == 0);
        }
    }
}

TEST_CASE("chart maps: truncation agrees with the exact map")
{
    const EssentialTree t = resolve(parse_poly(big));
    for (int id : t.essential_ids()) {
        const ChartMap exact = chart_map(t, id, -1);
        const ChartMap cut = chart_map(t, id, 9);
        CHECK(exact.X.truncated(9) == cut.X);
        CHECK(exact.Y.truncated(9) == cut.Y);
    }
}

TEST_CASE("the m-hat check sees a corrupted value")
{
    EssentialTree t = resolve(parse_poly(big));
    t.points[3].m_hat += 1;
    bool caught = false;
    for (const auto& c : validate_tree(t))
        if (!c.ok && c.name == "m-hat recursion at q3")
            caught = true;
    CHECK(caught);
}

TEST_CASE("resolution errors")
{
    CHECK(resolve(parse_poly("x+y2")).smooth());
    CHECK(resolve_error("1+x") == ErrorCode::NotLocal);
    CHECK(resolve_error("x2") == ErrorCode::NotReduced);
    CHECK(resolve_error("0") == ErrorCode::NotReduced);
    CHECK_NOTHROW(resolve(parse_poly("x2y+xy2")));
    CHECK(resolve_error(big, 2) == ErrorCode::NotReducedSuspected);
}
