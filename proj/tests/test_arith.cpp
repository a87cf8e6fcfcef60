#include <doctest.h>

#include "esdef/errors.hpp"
#include "esdef/factor.hpp"
#include "esdef/linalg.hpp"

#include <random>

using namespace esdef;

namespace {

UniPoly q(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return UniPoly::from_rationals(v);
}

UniPoly expand(const std::vector<Factor>& fs)
{
    UniPoly acc = q({1});
    for (const auto& f : fs)
        for (int i = 0; i < f.multiplicity; ++i)
            acc = acc * f.poly;
    return acc;
}

}  // namespace

TEST_CASE("rational roots split")
{
    auto f = factor_univariate(q({0, 1, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly.to_string() == "c");
    CHECK(f[1].poly.to_string() == "c+1");
}

TEST_CASE("c^2-2 stays irreducible over Q")
{
    auto f = factor_univariate(q({-2, 0, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].poly.to_string() == "c^2-2");
}

TEST_CASE("c^2-2 splits over Q(sqrt 2)")
{
    auto K = extend_tower(nullptr, q({-2, 0, 1}));
    CHECK(K->degree() == 2);
    auto f = factor_univariate(q({-2, 0, 1}), K);
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly.to_string() == "c-α1");
    CHECK(f[1].poly.to_string() == "c+α1");
}

TEST_CASE("degree multiplicativity and collapse")
{
    auto K = extend_tower(nullptr, q({-2, 0, 1}));
    auto a = FieldElement::generator(K);
    auto L = extend_tower(K, UniPoly({-a, FieldElement(0), FieldElement(1)}), true);
    CHECK(L->degree() == 4);
    CHECK(L->height() == 2);
    auto M = extend_tower(K, q({-3, 1}));
    CHECK(M == K);
    auto b = FieldElement::generator(L);
    CHECK((b * b * b * b).to_string() == "2");
    CHECK((b * b.inverse()).is_one());
}

TEST_CASE("reducible minimal polynomial is rejected on request")
{
    auto K = extend_tower(nullptr, q({-2, 0, 1}));
    CHECK_THROWS_AS(extend_tower(K, q({-2, 0, 1}), true), Error);
    CHECK_THROWS_AS(factor_univariate(UniPoly()), Error);
}

TEST_CASE("multiplicities and larger integer factorizations")
{
    // (c-1)^2 (c^2+1)(c^3-c-1)^3 (2c+3)
    UniPoly p = q({-1, 1}) * q({-1, 1}) * q({1, 0, 1}) * q({-1, -1, 0, 1}) * q({-1, -1, 0, 1}) *
                q({-1, -1, 0, 1}) * q({3, 2});
    auto f = factor_univariate(p);
    REQUIRE(f.size() == 4);
    CHECK(expand(f) == p.monic());
    // Swinnerton-Dyer style polynomial: many factors mod every prime
    UniPoly sd = q({1, 0, -10, 0, 1});
    auto g = factor_univariate(sd);
    CHECK(g.size() == 1);
    UniPoly prod = q({-6, 0, 1}) * q({-5, 0, 1}) * q({1, 1, 0, 0, 1});
    CHECK(factor_univariate(prod).size() == 3);
}

TEST_CASE("factorization over Q(i) of c^4+1 and over a degree-4 tower")
{
    auto K = extend_tower(nullptr, q({1, 0, 1}));
    auto f = factor_univariate(q({1, 0, 0, 0, 1}), K);
    CHECK(f.size() == 2);
    CHECK(expand(f) == q({1, 0, 0, 0, 1}));
    auto K2 = extend_tower(nullptr, q({-2, 0, 1}));
    auto L = extend_tower(K2, q({1, 0, 1}));
    auto g = factor_univariate(q({1, 0, 0, 0, 1}), L);
    CHECK(g.size() == 4);
    CHECK(expand(g) == q({1, 0, 0, 0, 1}));
}

TEST_CASE("restrict_scalars splits a functional along the flat basis")
{
    auto K = extend_tower(nullptr, q({-2, 0, 1}));
    auto a = FieldElement::generator(K);
    auto rows = restrict_scalars({FieldElement(1) + a, FieldElement(3)});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<Rational>{1, 3});
    CHECK(rows[1] == std::vector<Rational>{1, 0});
    auto id = restrict_scalars({FieldElement(5)});
    CHECK(id.size() == 1);
}

TEST_CASE("tower text forms")
{
    auto K = extend_tower(nullptr, q({-2, 0, 1}));
    CHECK(K->describe() == "Q(α1: α1^2-2)");
    auto a = FieldElement::generator(K);
    CHECK((FieldElement(make_rational(1, 2)) - a * FieldElement(3)).to_string() == "1/2-3*α1");
}

namespace {

std::vector<TowerPtr> test_towers()
{
    const TowerPtr r2 = extend_tower(nullptr, q({-2, 0, 1}), true);
    const TowerPtr r23 = extend_tower(r2, q({-3, 0, 1}), true);
    const TowerPtr r235 = extend_tower(r23, q({-5, 0, 1}), true);
    const TowerPtr c3 = extend_tower(r2, q({-3, 0, 0, 1}), true);
    const TowerPtr seventh = extend_tower(nullptr, q({1, 1, 1, 1, 1, 1, 1}), true);
    return {r2, r23, r235, c3, seventh};
}

FieldElement random_element(std::mt19937_64& rng, const TowerPtr& K)
{
    std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
    std::vector<Rational> c(K->degree());
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElement(K, c);
}

// 3x3 determinant over K by cofactors
bool determinant_is_zero(const std::vector<std::vector<FieldElement>>& A)
{
    const FieldElement det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                             A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                             A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    return det.is_zero();
}

}  // namespace

TEST_CASE("field axioms on random elements of towers up to degree 8")
{
    std::mt19937_64 rng(5);
    for (const auto& K : test_towers()) {
        CHECK(K->degree() <= 8);
        for (int i = 0; i < 30; ++i) {
            const FieldElement a = random_element(rng, K), b = random_element(rng, K), c = random_element(rng, K);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a.norm() != 0);
            }
            CHECK((a * b).norm() == a.norm() * b.norm());
        }
    }
}

TEST_CASE("restricted systems: kernel dimension and direct evaluation")
{
    // unknowns x_j in K are written sum_k x_jk beta_k with rational x_jk
    std::mt19937_64 rng(9);
    for (const auto& K : test_towers()) {
        const std::size_t d = K->degree();
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<FieldElement>> A(3, std::vector<FieldElement>(3));
            for (int i = 0; i < 2; ++i)
                for (auto& e : A[i])
                    e = random_element(rng, K);
            const bool singular = trial % 2 == 1;
            const FieldElement t = random_element(rng, K);
            for (int j = 0; j < 3; ++j)
                A[2][j] = singular ? A[0][j] + t * A[1][j] : random_element(rng, K);

            RowEchelon ech(3 * d);
            for (const auto& row : A) {
                std::vector<FieldElement> expanded;
                for (const auto& a : row)
                    for (std::size_t k = 0; k < d; ++k)
                        expanded.push_back(a * FieldElement::basis(K, k));
                for (const auto& r : restrict_scalars(expanded))
                    ech.add_row(make_sparse(r));
            }
            ech.reduce_fully();
            std::vector<std::size_t> all(3 * d);
            for (std::size_t c = 0; c < all.size(); ++c)
                all[c] = c;
            const auto kernel = ech.kernel_basis(all);
            // rank over K is 3 for a random matrix and 2 with a dependent row
            const long rank_k = singular || determinant_is_zero(A) ? 2 : 3;
            CHECK(kernel.size() == d * (3 - rank_k));
            for (const auto& v : kernel) {
                std::vector<FieldElement> x(3, FieldElement(0).embed(K));
                for (const auto& [col, val] : v)
                    x[col / d] += FieldElement(val) * FieldElement::basis(K, col % d);
                for (const auto& row : A)
                    CHECK((row[0] * x[0] + row[1] * x[1] + row[2] * x[2]).is_zero());
            }
        }
    }
}
