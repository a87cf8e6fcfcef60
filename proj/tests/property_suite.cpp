// Standalone randomized property checks. Exit status 0 when every check passes.
#include "esdef/factor.hpp"
#include "esdef/parse.hpp"
#include "esdef/standard_basis.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>

using namespace esdef;

namespace {

struct Suite {
    const char* name;
    int cases;
    std::function<std::string(std::mt19937_64&, int)> check;  // empty string on success
};

std::vector<TowerPtr> towers()
{
    const TowerPtr Q = FieldTower::rationals();
    const TowerPtr r2 = extend_tower(Q, UniPoly::from_rationals({-2, 0, 1}), true);
    const TowerPtr r2i = extend_tower(r2, UniPoly::from_rationals({1, 0, 1}), true);
    const TowerPtr c2 = extend_tower(Q, UniPoly::from_rationals({-2, 0, 0, 1}), true);
    const TowerPtr q4 = extend_tower(Q, UniPoly::from_rationals({1, 0, -10, 0, 1}), true);
    const TowerPtr r5 = extend_tower(Q, UniPoly::from_rationals({-5, 0, 1}), true);
    return {Q, r2, r2i, c2, q4, r5};
}

FieldElement random_element(std::mt19937_64& rng, const TowerPtr& K, bool nonzero)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (;;) {
        std::vector<Rational> c(K->degree());
        for (auto& q : c) {
            q = Rational(num(rng), den(rng));
            q.canonicalize();
        }
        // sparse elements keep the factors readable
        if (K->degree() > 1 && rng() % 2)
            for (std::size_t i = 1; i < c.size(); ++i)
                c[i] = 0;
        FieldElement e(K, c);
        if (!nonzero || !e.is_zero())
            return e;
    }
}

UniPoly random_upoly(std::mt19937_64& rng, const TowerPtr& K, int degree)
{
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i)
        c.push_back(random_element(rng, K, false));
    c.push_back(FieldElement(1).embed(K));
    return UniPoly(c);
}

UniPoly power(const UniPoly& p, int e)
{
    UniPoly r = UniPoly::from_rationals({1});
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

std::string factorization_case(std::mt19937_64& rng, int)
{
    static const std::vector<TowerPtr> ks = towers();
    const TowerPtr K = ks[rng() % ks.size()];
    // the product of a few random factors, some repeated, of total degree <= 12
    UniPoly p = UniPoly::monomial(random_element(rng, K, true), 0);
    int degree = 0;
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const int e = rng() % 4 == 0 ? 2 : 1;
        if (degree + d * e > 12)
            break;
        p = p * power(random_upoly(rng, K, d), e);
        degree += d * e;
    }
    if (degree == 0)
        p = p * random_upoly(rng, K, 1);
    const TowerPtr field = rng() % 2 ? K : nullptr;
    const auto factors = factor_univariate(p, field ? field : K);
    UniPoly product = UniPoly::monomial(p.leading(), 0);
    for (const auto& f : factors) {
        if (!(f.poly.monic() == f.poly))
            return "non-monic factor " + f.poly.to_string() + " of " + p.to_string();
        product = product * power(f.poly, f.multiplicity);
    }
    if (!(product == p))
        return "product of factors differs from " + p.to_string() + " over " + K->describe();
    // idempotency on one factor
    const UniPoly& g = factors[rng() % factors.size()].poly;
    const auto again = factor_univariate(g, K);
    if (again.size() != 1 || again.front().multiplicity != 1 || !(again.front().poly == g))
        return "factor " + g.to_string() + " is not irreducible on refactoring";
    return {};
}

std::string membership_case(std::mt19937_64& rng, int)
{
    // generators of order >= 2; pure powers keep the colength finite
    std::vector<LocalPoly> gens;
    const int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
        const Monomial var{i % 2, 1 - i % 2};
        gens.push_back(oracle::random_poly(rng, 4, 3) * LocalPoly::term(var, Rational(1)));
    }
    gens.push_back(LocalPoly::term({4 + static_cast<int>(rng() % 4), 0}, Rational(1)) +
                   oracle::random_poly(rng, 6, 2));
    gens.push_back(LocalPoly::term({0, 4 + static_cast<int>(rng() % 4)}, Rational(1)));
    const IdealPresentation I(gens);
    LocalPoly g;
    for (const auto& h : gens)
        g = g + h * oracle::random_poly(rng, 3, 3, false);
    if (!contains(I, g))
        return "combination " + g.to_string() + " not found in the ideal";
    if (!normal_form(g, I).is_zero())
        return "nonzero normal form of a member";
    // standard monomials are never members
    for (const auto& m : quotient_monomials(I))
        if (contains(I, LocalPoly::term(m, Rational(1))))
            return "standard monomial " + m.to_string() + " reported as member";
    const auto c = colength(I);
    if (!c || *c != oracle::local_colength(gens))
        return "colength disagrees with the linear-algebra oracle";
    return {};
}

std::string roundtrip_case(std::mt19937_64& rng, int)
{
    const LocalPoly p = oracle::random_poly(rng, 12, 1 + static_cast<int>(rng() % 8), rng() % 2);
    for (const auto order : {MonomialOrder::Local, MonomialOrder::Global}) {
        const std::string s = p.to_string(order);
        const LocalPoly q = parse_poly(s);
        if (!(q == p))
            return "round trip changed " + s + " into " + q.to_string(order);
    }
    return {};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240917;
    const Suite suites[] = {
        {"factorization product identity", 200, factorization_case},
        {"standard-basis membership soundness", 100, membership_case},
        {"parse/print round trip", 100, roundtrip_case},
    };
    bool ok = true;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& s : suites) {
        std::mt19937_64 rng(seed);
        int failures = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < s.cases; ++i) {
            std::string msg;
            try {
                msg = s.check(rng, i);
            } catch (const std::exception& e) {
                msg = std::string("exception: ") + e.what();
            }
            if (!msg.empty()) {
                ++failures;
                std::cout << "  case " << i << ": " << msg << "\n";
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (failures ? "FAIL " : "PASS ") << s.name << ": " << s.cases - failures << "/" << s.cases
                  << " (" << secs << " s)\n";
        ok = ok && failures == 0;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << total << " s, seed " << seed << "\n";
    if (total >= 120) {
        std::cout << "FAIL time budget of 120 s exceeded\n";
        ok = false;
    }
    return ok ? 0 : 1;
}
