#include "esdef/factor.hpp"

#include "esdef/errors.hpp"

#include <algorithm>

namespace esdef {

namespace {

// Monic irreducible factors over Q of a monic squarefree rational polynomial.
std::vector<UniPoly> factor_squarefree_q(const UniPoly& p)
{
    if (p.degree() <= 1)
        return {p};
    std::vector<Rational> q = p.rational_coeffs();
    Integer den = 1;
    for (const auto& c : q)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : q)
        z.push_back(Integer(c * den));
    Integer g = 0;
    for (const auto& c : z)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (auto& c : z)
        c /= g;
    std::vector<UniPoly> out;
    for (const auto& f : detail::zassenhaus(z)) {
        std::vector<Rational> r(f.begin(), f.end());
        out.push_back(UniPoly::from_rationals(r).monic());
    }
    return out;
}

std::vector<FieldElement> generators(const TowerPtr& K)
{
    std::vector<FieldElement> g;
    for (std::size_t i = 0; i < K->height(); ++i)
        g.push_back(FieldElement::basis(K, K->prefix_degree(i)));
    return g;
}

// Newton interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys)
{
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    UniPoly acc = UniPoly::from_rationals({ys[n - 1]});
    for (std::size_t i = n - 1; i-- > 0;)
        acc = acc * UniPoly::from_rationals({-xs[i], 1}) + UniPoly::from_rationals({ys[i]});
    return acc;
}

// Norm from K to Q of p(t - theta), as a rational polynomial.
UniPoly shifted_norm(const UniPoly& p, const FieldElement& theta, const TowerPtr& K)
{
    const std::size_t n = static_cast<std::size_t>(p.degree()) * K->degree();
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i <= n; ++i) {
        Rational r(static_cast<long>(i));
        FieldElement v = p.eval(FieldElement(r) - theta).embed(K);
        xs.push_back(r);
        ys.push_back(v.norm());
    }
    return interpolate(xs, ys);
}

// Monic irreducible factors over K of a monic squarefree p.
std::vector<UniPoly> factor_squarefree_tower(const UniPoly& p, const TowerPtr& K)
{
    if (p.degree() <= 1)
        return {p};
    const auto gens = generators(K);
    for (long n = 0; n < 64; ++n) {
        const long s = (n % 2 == 1) ? (n + 1) / 2 : -(n / 2);
        FieldElement theta;
        Rational w = 1;
        for (const auto& g : gens) {
            w *= s;
            theta += g * FieldElement(w);
        }
        UniPoly N = shifted_norm(p, theta, K);
        if (gcd(N, N.derivative()).degree() > 0)
            continue;
        std::vector<UniPoly> out;
        long total = 0;
        for (const auto& Ni : factor_squarefree_q(N.monic())) {
            UniPoly g = gcd(p, Ni.shift(theta));
            if (g.degree() > 0) {
                out.push_back(g);
                total += g.degree();
            }
        }
        if (total != p.degree())
            throw Error(ErrorCode::InternalInconsistency, "norm factorization lost degree");
        return out;
    }
    throw Error(ErrorCode::InternalInconsistency, "no squarefree norm found");
}

}  // namespace

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
    std::vector<UniPoly> out;
    if (p.degree() == 0)
        return out;
    UniPoly dp = p.derivative();
    UniPoly a = gcd(p, dp);
    UniPoly b = divmod(p, a).first;
    UniPoly c = divmod(dp, a).first;
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly ai = gcd(b, d);
        out.push_back(ai);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
    }
    return out;
}

std::vector<Factor> factor_univariate(const UniPoly& p, const TowerPtr& field)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    TowerPtr K = common_tower(field, p.tower());
    if (K && K->height() == 0)
        K.reset();
    std::vector<Factor> out;
    const auto parts = squarefree_decomposition(p.monic());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0)
            continue;
        auto irr = K ? factor_squarefree_tower(parts[i], K) : factor_squarefree_q(parts[i]);
        for (auto& f : irr)
            out.push_back({std::move(f), static_cast<int>(i + 1)});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (canonical_less(a.poly, b.poly))
            return true;
        if (canonical_less(b.poly, a.poly))
            return false;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

AdjoinedRoot adjoin_root(const TowerPtr& base, const UniPoly& m, bool verify)
{
    if (m.degree() < 1)
        throw Error(ErrorCode::InvalidArgument, "cannot adjoin a root of a constant");
    TowerPtr K = common_tower(base, m.tower());
    UniPoly mm = m.monic();
    if (mm.degree() == 1) {
        FieldElement r = -mm.coeff(0);
        return {K, K ? r.embed(K) : r};
    }
    if (verify) {
        auto f = factor_univariate(mm, K);
        if (f.size() != 1 || f[0].multiplicity != 1)
            throw Error(ErrorCode::ReducibleMinimalPolynomial, "minimal polynomial " + mm.to_string() + " splits");
    }
    TowerPtr B = K ? K : FieldTower::rationals();
    std::vector<std::vector<Rational>> minpoly;
    for (const auto& c : mm.coeffs())
        minpoly.push_back(c.embed(B).coeffs());
    TowerPtr ext = FieldTower::extend(B, std::move(minpoly));
    return {ext, FieldElement::generator(ext)};
}

TowerPtr extend_tower(const TowerPtr& base, const UniPoly& m, bool verify)
{
    return adjoin_root(base, m, verify).tower;
}

std::vector<std::vector<Rational>> restrict_scalars(const std::vector<FieldElement>& row)
{
    TowerPtr K;
    for (const auto& e : row)
        K = common_tower(K, e.tower());
    const std::size_t D = K ? K->degree() : 1;
    std::vector<std::vector<Rational>> out(D, std::vector<Rational>(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) {
        const FieldElement e = K ? row[j].embed(K) : row[j];
        for (std::size_t i = 0; i < D; ++i)
            out[i][j] = e.coeffs()[i];
    }
    return out;
}

}  // namespace esdef
