#include <doctest.h>

#include "esdef/errors.hpp"
#include "esdef/local.hpp"
#include "esdef/parse.hpp"
#include "oracles.hpp"

using namespace esdef;

namespace {

std::string show(const LocalPoly& p, MonomialOrder o = MonomialOrder::Local)
{
    return p.to_string(o);
}

ErrorCode parse_error(const char* s)
{
    try {
        parse_poly(s);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("parse the big example")
{
    const LocalPoly f = parse_poly("(y3+x7)*(y3+x10)");
    CHECK(show(f) == "y6+x7y3+x10y3+x17");
    CHECK(show(f, MonomialOrder::Global) == "x17+x10y3+x7y3+y6");
    CHECK(f.size() == 4);
}

TEST_CASE("parse zero, fractions and implicit products")
{
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("x - x").is_zero());
    const LocalPoly n1 = parse_poly("y + 3/10x - 51/10");
    CHECK(n1.coeff({0, 0}) == Rational(-51, 10));
    CHECK(n1.coeff({1, 0}) == Rational(3, 10));
    CHECK(n1.coeff({0, 1}) == 1);
    CHECK(parse_poly("2x^2y^3") == parse_poly("2*x^2*y^3"));
    CHECK(parse_poly("x2y3") == parse_poly("x^2*y^3"));
    CHECK(parse_poly("(x+y)^3") == parse_poly("x3+3x2y+3xy2+y3"));
    CHECK(parse_poly("-(x-y)") == parse_poly("y-x"));
    CHECK(parse_poly("x/2") == parse_poly("1/2x"));
    CHECK(parse_poly("y \xE2\x88\x92 x") == parse_poly("y-x"));
}

TEST_CASE("parse errors carry codes")
{
    CHECK(parse_error("x+") == ErrorCode::SyntaxError);
    CHECK(parse_error("(x") == ErrorCode::SyntaxError);
    CHECK(parse_error("x+z") == ErrorCode::UnknownVariable);
    CHECK(parse_error("1/0") == ErrorCode::SyntaxError);
    try {
        parse_poly("x+*y");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("multiplicity and tangent cone")
{
    CHECK(multiplicity(parse_poly("x*y")) == 2);
    CHECK(multiplicity(parse_poly("(y3+x7)*(y3+x10)")) == 6);
    CHECK(!multiplicity(LocalPoly()).has_value());
    CHECK(tangent_cone(parse_poly("y2-x3")) == parse_poly("y2"));
    CHECK(tangent_cone(parse_poly("xy+x3")) == parse_poly("xy"));
    CHECK(tangent_cone(parse_poly("(y3+x7)*(y3+x10)")) == parse_poly("y6"));
    CHECK_THROWS_AS(tangent_cone(LocalPoly()), Error);
}

TEST_CASE("jacobian")
{
    auto [fx, fy] = jacobian(parse_poly("y2-x3"));
    CHECK(fx == parse_poly("-3x2"));
    CHECK(fy == parse_poly("2y"));
    auto [gx, gy] = jacobian(parse_poly("xy"));
    CHECK(gx == parse_poly("y"));
    CHECK(gy == parse_poly("x"));
    auto [cx, cy] = jacobian(parse_poly("5"));
    CHECK(cx.is_zero());
    CHECK(cy.is_zero());
}

TEST_CASE("local and global leading terms")
{
    const LocalPoly f = parse_poly("x3+xy+y5");
    CHECK(f.leading(MonomialOrder::Local).first == Monomial{1, 1});
    CHECK(f.leading(MonomialOrder::Global).first == Monomial{0, 5});
    CHECK(compare({1, 0}, {0, 1}, MonomialOrder::Local) > 0);
    CHECK(compare({0, 0}, {3, 0}, MonomialOrder::Local) > 0);
    CHECK(compare({0, 0}, {3, 0}, MonomialOrder::Global) < 0);
}

TEST_CASE("monomial orders are total and multiplicative")
{
    std::vector<Monomial> ms;
    for (int d = 0; d <= 6; ++d)
        for (int a = 0; a <= d; ++a)
            ms.push_back({a, d - a});
    for (auto order : {MonomialOrder::Local, MonomialOrder::Global}) {
        for (const auto& p : ms) {
            CHECK(compare(p, p, order) == 0);
            for (const auto& q : ms) {
                if (p == q)
                    continue;
                const int pq = compare(p, q, order);
                CHECK(pq != 0);
                CHECK(pq == -compare(q, p, order));
                for (const auto& r : ms) {
                    if (pq > 0 && compare(q, r, order) > 0)
                        CHECK(compare(p, r, order) > 0);
                }
                CHECK((compare(p * Monomial{1, 2}, q * Monomial{1, 2}, order) > 0) == (pq > 0));
            }
            if (!(p == Monomial{0, 0}))
                CHECK((compare(Monomial{0, 0}, p, order) > 0) == (order == MonomialOrder::Local));
        }
    }
}

TEST_CASE("multiplicity is additive")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const LocalPoly f = oracle::random_poly(rng, 6, 4, false);
        const LocalPoly g = oracle::random_poly(rng, 6, 4, false);
        if (f.is_zero() || g.is_zero())
            continue;
        CHECK(*multiplicity(f * g) == *multiplicity(f) + *multiplicity(g));
    }
}

TEST_CASE("arithmetic identities")
{
    const LocalPoly f = parse_poly("1/2x2-3xy+y4");
    const LocalPoly g = parse_poly("x-y+7/3");
    CHECK((f + g) - g == f);
    CHECK((f * g).diff_x() == f.diff_x() * g + f * g.diff_x());
    CHECK(LocalPoly::mul_truncated(f, g, 2) == (f * g).truncated(2));
    CHECK(compose(to_tower(f), TowerPoly::y(), TowerPoly::x(), -1) ==
          to_tower(parse_poly("1/2y2-3xy+x4")));
}
