#include <doctest.h>

#include "esdef/errors.hpp"
#include "esdef/ideals.hpp"
#include "esdef/local.hpp"
#include "esdef/newton.hpp"
#include "esdef/parse.hpp"
#include "oracles.hpp"

#include <set>

using namespace esdef;

namespace {

const char* big = "(y3+x7)*(y3+x10)";

IdealPresentation ideal(std::initializer_list<const char*> gens)
{
    std::vector<LocalPoly> v;
    for (const char* g : gens)
        v.push_back(parse_poly(g));
    return IdealPresentation(v);
}

std::string monic_text(const LocalPoly& r)
{
    const Rational lc = r.leading(MonomialOrder::Local).second;
    return r.scaled(Rational(1) / lc).to_string(MonomialOrder::Local);
}

long col(const IdealPresentation& I)
{
    return colength(I).value();
}

// g satisfies mt >= m-hat at every essential point, by direct pullback
bool meets_cluster(const EssentialTree& t, const LocalPoly& g)
{
    for (const auto& p : t.points) {
        if (!p.essential)
            continue;
        const ChartMap phi = chart_map(t, p.id, p.m_hat - 1);
        if (!compose(to_tower(g), phi.X, phi.Y, p.m_hat - 1).is_zero())
            return false;
    }
    return true;
}

const char* const corpus[] = {"xy",    "y2-x3",  "y2-x5", "y2-x7", "x2y+y3", "x2y+y4",  "x3+y4", "x3+xy3",
                              "x3+y5", "x3+y3",  "x4+y4", "x5+y5", "x3-y5",  "x4-y5",   big};

}  // namespace

TEST_CASE("cusp ideals")
{
    const DeformationIdeals I = deformation_ideals(parse_poly("y2-x3"));
    CHECK(col(I.s.ideal) == 5);
    CHECK(ideal_equal(I.s.ideal, ideal({"y2", "x2y", "x3"})));
    CHECK(col(I.es_fix.ideal) == 4);
    CHECK(ideal_equal(I.es, ideal({"x2", "y"})));
    CHECK(col(I.fixed_tjurina) == 4);
}

TEST_CASE("node ideals")
{
    const DeformationIdeals I = deformation_ideals(parse_poly("xy"));
    CHECK(col(I.s.ideal) == 3);
    CHECK(col(I.es_fix.ideal) == 3);
    CHECK(col(I.es) == 1);
}

TEST_CASE("smooth germs give unit ideals")
{
    const DeformationIdeals I = deformation_ideals(parse_poly("y+x2"));
    CHECK(I.tree.smooth());
    CHECK(col(I.s.ideal) == 0);
    CHECK(col(I.es) == 0);
}

TEST_CASE("big example: I^es_fix equals the seven-generator ideal")
{
    const DeformationIdeals I = deformation_ideals(parse_poly(big));
    CHECK(col(I.tjurina) == 59);
    CHECK(col(I.s.ideal) == 57);
    CHECK(col(I.es_fix.ideal) == 54);
    CHECK(col(I.es) == 52);
    const IdealPresentation expected =
        ideal({"2xy5+x8y2+x11y2", "y6", "x5y4", "x7y3", "x10y2", "x14y", "x17"});
    CHECK(ideal_equal(I.es_fix.ideal, expected));
}

TEST_CASE("big example: normal forms of I^es generators against the Tjurina ideal")
{
    const LocalPoly f = parse_poly(big);
    const IdealPresentation tj = tjurina_ideal(f);
    const std::vector<const char*> fix = {"2xy5+x8y2+x11y2", "y6", "x5y4", "x7y3", "x10y2", "x14y", "x17"};
    std::set<std::string> remainders;
    std::vector<LocalPoly> gens{f.diff_x(), f.diff_y()};
    for (const char* g : fix)
        gens.push_back(parse_poly(g));
    for (const auto& g : gens) {
        const LocalPoly r = normal_form(g, tj);
        if (!r.is_zero())
            remainders.insert(monic_text(r));
    }
    CHECK(remainders == std::set<std::string>{"x5y4", "x10y2", "x14y"});
    // and they span I^es modulo the Tjurina ideal
    std::vector<LocalPoly> span = tj.generators();
    for (const char* m : {"x5y4", "x10y2", "x14y"})
        span.push_back(parse_poly(m));
    CHECK(ideal_equal(es_ideal(f), IdealPresentation(span)));
}

TEST_CASE("big example: Newton basis of I^es / <f, j(f)>")
{
    const LocalPoly f = parse_poly(big);
    const auto basis = es_basis_newton(f);
    REQUIRE(basis.size() == 7);
    const NewtonDiagram d = newton_diagram(f);
    std::set<std::string> got;
    for (const auto& b : basis) {
        REQUIRE(b.size() == 1);
        CHECK(newton_order(b.terms().front().first, d) >= 1);
        got.insert(b.to_string(MonomialOrder::Local));
    }
    CHECK(got == std::set<std::string>{"x3y5", "x4y5", "x5y4", "x5y5", "x6y4", "x14y", "x15y"});
    CHECK(ideal_equal(es_ideal_newton(f), es_ideal(f)));
}

TEST_CASE("x10y2 is a first-order equisingular direction whose line drops mu")
{
    // below the Newton boundary, equivalent to a higher term modulo <f, j(f)>
    const LocalPoly f = parse_poly(big);
    const LocalPoly g = parse_poly("x10y2");
    CHECK(contains(es_ideal(f), g));
    CHECK(newton_order({10, 2}, newton_diagram(f)) < 1);
    for (const Rational& t : {Rational(1), Rational(13, 7)})
        CHECK(milnor_number(f + g.scaled(t)) == 70);
}

TEST_CASE("Newton presentations of small germs")
{
    CHECK(ideal_equal(es_ideal_newton(parse_poly("y2-x3")), ideal({"x2", "y"})));
    CHECK(ideal_equal(es_ideal_newton(parse_poly("x2+y2")), ideal({"x", "y"})));
    CHECK(es_basis_newton(parse_poly("y2-x3")).empty());
    CHECK(es_basis_newton(parse_poly("x2+y2")).empty());
    CHECK_THROWS_AS(es_ideal_newton(parse_poly("(y2-x3)^2-x7")), Error);
}

TEST_CASE("corpus: colength of I^s is the degree formula and generators meet the cluster")
{
    for (const char* s : corpus) {
        const EssentialTree t = resolve(parse_poly(s));
        const TruncatedIdeal I = topological_singularity_ideal(t);
        CHECK_MESSAGE(col(I.ideal) == degree_formula(t), s);
        CHECK_MESSAGE(oracle::local_colength(I.ideal.generators()) == degree_formula(t), s);
        for (const auto& g : I.ideal.generators())
            CHECK_MESSAGE(meets_cluster(t, g), s);
        // every monomial of degree D + 1 meets the conditions on its own
        for (const auto& m : monomials_of_degree(I.D + 1))
            CHECK_MESSAGE(meets_cluster(t, LocalPoly::term(m, Rational(1))), s);
    }
}

TEST_CASE("corpus: chain, gaps and free vertices")
{
    for (const char* s : corpus) {
        const DeformationIdeals I = deformation_ideals(parse_poly(s));
        CHECK_MESSAGE(ideal_contains(I.es_fix.ideal, I.s.ideal), s);
        CHECK_MESSAGE(ideal_contains(I.es, I.es_fix.ideal), s);
        CHECK_MESSAGE(col(I.fixed_tjurina) - col(I.tjurina) == 2, s);
        CHECK_MESSAGE(col(I.es_fix.ideal) - col(I.es) == 2, s);
        CHECK_MESSAGE(col(I.s.ideal) - col(I.es_fix.ideal) == free_vertex_count(I.tree), s);
    }
}

TEST_CASE("corpus: condition-based I^es agrees with the Newton presentation")
{
    for (const char* s : corpus) {
        const LocalPoly f = parse_poly(s);
        CHECK_MESSAGE(ideal_equal(es_ideal(f), es_ideal_newton(f)), s);
    }
}

TEST_CASE("without free points offset elimination is the plain kernel")
{
    for (const char* s : {"xy", "x3+y3", "x4+y4", "x5+y5", "x2y+y3", "x3-xy2"}) {
        const EssentialTree t = resolve(parse_poly(s));
        REQUIRE(free_vertex_count(t) == 0);
        const TruncatedIdeal fix = es_fix_ideal(t, topological_singularity_ideal(t).D);
        CHECK_MESSAGE(ideal_equal(fix.ideal, topological_singularity_ideal(t).ideal), s);
    }
}

TEST_CASE("truncation override")
{
    const EssentialTree t = resolve(parse_poly(big));
    const TruncatedIdeal base = topological_singularity_ideal(t);
    const TruncatedIdeal wide = topological_singularity_ideal(t, base.D + 3);
    CHECK(wide.D == base.D + 3);
    CHECK(ideal_equal(base.ideal, wide.ideal));
    CHECK_THROWS_AS(topological_singularity_ideal(t, base.D - 1), Error);
    const TruncatedIdeal fix = es_fix_ideal(t);
    CHECK(ideal_equal(fix.ideal, es_fix_ideal(t, base.D + 2).ideal));
}

TEST_CASE("cluster ideal with custom virtual multiplicities")
{
    // a single point of virtual multiplicity k gives the k-th power of the maximal ideal
    const EssentialTree t = resolve(parse_poly("xy"));
    std::vector<int> v(t.points.size(), 1);
    v[0] = 4;
    const TruncatedIdeal I = cluster_ideal(t, v);
    CHECK(col(I.ideal) == 10);
    CHECK(I.D == 3);
}
