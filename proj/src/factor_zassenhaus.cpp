#include "esdef/factor.hpp"

#include "esdef/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace esdef::detail {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;
using PPoly = std::vector<u64>;  // ascending, trimmed, coefficients in [0, p)

// ---- arithmetic in F_p[t] -------------------------------------------------

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(PPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

long deg(const PPoly& a) { return static_cast<long>(a.size()) - 1; }

PPoly reduce(const ZPoly& f, u64 p)
{
    PPoly r(f.size());
    const Integer P(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer m = f[i] % P;
        if (m < 0)
            m += P;
        r[i] = m.get_ui();
    }
    trim(r);
    return r;
}

PPoly padd(const Fp& F, const PPoly& a, const PPoly& b)
{
    PPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

PPoly psub(const Fp& F, const PPoly& a, const PPoly& b)
{
    PPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

PPoly pmul(const Fp& F, const PPoly& a, const PPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    PPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
    }
    trim(r);
    return r;
}

std::pair<PPoly, PPoly> pdivmod(const Fp& F, PPoly a, const PPoly& b)
{
    if (deg(a) < deg(b))
        return {{}, a};
    const std::size_t db = b.size() - 1;
    const u64 inv = F.inv(b.back());
    PPoly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        if (!a[i])
            continue;
        u64 c = F.mul(a[i], inv);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

PPoly pmonic(const Fp& F, PPoly a)
{
    if (a.empty() || a.back() == 1)
        return a;
    u64 inv = F.inv(a.back());
    for (auto& c : a)
        c = F.mul(c, inv);
    return a;
}

PPoly pgcd(const Fp& F, PPoly a, PPoly b)
{
    while (!b.empty()) {
        PPoly r = pdivmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, a);
}

// s*a + t*b = 1 for coprime a, b.
void pxgcd(const Fp& F, const PPoly& a, const PPoly& b, PPoly& s, PPoly& t)
{
    PPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PPoly s2 = psub(F, s0, pmul(F, q, s1));
        PPoly t2 = psub(F, t0, pmul(F, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw Error(ErrorCode::InternalInconsistency, "Hensel factors are not coprime modulo p");
    u64 inv = F.inv(r0[0]);
    s = pmul(F, s0, {inv});
    t = pmul(F, t0, {inv});
}

PPoly ppowmod(const Fp& F, PPoly base, const Integer& e, const PPoly& mod)
{
    PPoly r = {1};
    base = pdivmod(F, base, mod).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = pdivmod(F, pmul(F, r, r), mod).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = pdivmod(F, pmul(F, r, base), mod).second;
    }
    return r;
}

void equal_degree(const Fp& F, const PPoly& g, long d, std::mt19937_64& rng, std::vector<PPoly>& out)
{
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coin(0, F.p - 1);
    for (;;) {
        PPoly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a)
            c = coin(rng);
        trim(a);
        if (deg(a) < 1)
            continue;
        PPoly b = psub(F, ppowmod(F, a, e, g), {1});
        PPoly h = pgcd(F, g, b);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, pdivmod(F, g, h).first, d, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<PPoly> factor_mod_p(const Fp& F, PPoly f, std::mt19937_64& rng)
{
    std::vector<PPoly> out;
    const PPoly x = {0, 1};
    PPoly h = x;
    const Integer P(static_cast<unsigned long>(F.p));
    for (long i = 1; deg(f) >= 2 * i; ++i) {
        h = ppowmod(F, h, P, f);
        PPoly g = pgcd(F, f, psub(F, h, x));
        if (deg(g) > 0) {
            equal_degree(F, g, i, rng, out);
            f = pdivmod(F, f, g).first;
            h = pdivmod(F, h, f).second;
        }
    }
    if (deg(f) > 0)
        out.push_back(f);
    return out;
}

// ---- integer polynomials -------------------------------------------------

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

ZPoly from_p(const PPoly& a)
{
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

void mod_into(ZPoly& a, const Integer& m)
{
    for (auto& c : a) {
        c %= m;
        if (c < 0)
            c += m;
    }
    ztrim(a);
}

Integer content(const ZPoly& a)
{
    Integer g = 0;
    for (const auto& c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Exact division in Z[t]; nullopt-like empty result signalled by `ok`.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b, bool& ok)
{
    ok = false;
    if (a.size() < b.size())
        return {};
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0)
            continue;
        if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t()))
            return {};
        Integer c = a[i] / b.back();
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0)
            return {};
    ok = true;
    ztrim(q);
    return q;
}

Integer symmetric(Integer c, const Integer& m)
{
    c %= m;
    if (c < 0)
        c += m;
    if (2 * c > m)
        c -= m;
    return c;
}

// Lifts f = lc * g * h (mod p), g monic, to the same shape modulo p^k.
void hensel_pair(const Fp& F, const ZPoly& f, const PPoly& g0, const PPoly& h0, unsigned k,
                 ZPoly& G, ZPoly& H)
{
    PPoly s, t;
    pxgcd(F, g0, h0, s, t);
    G = from_p(g0);
    H = from_p(h0);
    const Integer P(static_cast<unsigned long>(F.p));
    Integer pj = P;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly diff = f;
        ZPoly gh = zmul(G, H);
        diff.resize(std::max(diff.size(), gh.size()));
        for (std::size_t i = 0; i < gh.size(); ++i)
            diff[i] -= gh[i];
        ztrim(diff);
        for (auto& c : diff)
            c /= pj;  // exact
        PPoly e = reduce(diff, F.p);
        auto [q, r] = pdivmod(F, pmul(F, t, e), g0);
        PPoly dh = padd(F, pmul(F, s, e), pmul(F, q, h0));
        ZPoly dg_z = from_p(r), dh_z = from_p(dh);
        G.resize(std::max(G.size(), dg_z.size()));
        for (std::size_t i = 0; i < dg_z.size(); ++i)
            G[i] += pj * dg_z[i];
        H.resize(std::max(H.size(), dh_z.size()));
        for (std::size_t i = 0; i < dh_z.size(); ++i)
            H[i] += pj * dh_z[i];
        pj *= P;
        mod_into(G, pj);
        mod_into(H, pj);
    }
}

bool is_prime_candidate(const ZPoly& f, u64 p)
{
    const Integer P(static_cast<unsigned long>(p));
    if (mpz_divisible_p(f.back().get_mpz_t(), P.get_mpz_t()))
        return false;
    Fp F{p};
    PPoly fp = reduce(f, p);
    PPoly df;
    for (std::size_t i = 1; i < fp.size(); ++i)
        df.push_back(F.mul(fp[i], i % p));
    trim(df);
    return deg(pgcd(F, fp, df)) == 0;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f)
{
    const long n = static_cast<long>(f.size()) - 1;
    if (n <= 1)
        return {f};

    std::mt19937_64 rng(0x5eed5eedULL);
    u64 best_p = 0;
    std::vector<PPoly> best;
    Integer candidate = 1u << 20;
    for (int found = 0; found < 5;) {
        mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
        const u64 p = candidate.get_ui();
        if (!is_prime_candidate(f, p))
            continue;
        ++found;
        Fp F{p};
        auto facs = factor_mod_p(F, pmonic(F, reduce(f, p)), rng);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1)
            break;
    }
    if (best.size() == 1)
        return {f};

    const Fp F{best_p};
    const Integer P(static_cast<unsigned long>(best_p));
    // coefficient bound for lc * (any factor): |lc| * 2^n * ||f||_1, doubled for the symmetric range
    Integer norm1 = 0;
    for (const auto& c : f)
        norm1 += abs(c);
    Integer bound = 2 * abs(f.back()) * norm1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    unsigned k = 1;
    Integer pk = P;
    while (pk <= bound) {
        pk *= P;
        ++k;
    }

    // Lift one factor at a time off the remaining product.
    std::vector<ZPoly> lifted;
    ZPoly rest = f;
    const u64 lc_mod = reduce(ZPoly{f.back()}, best_p).at(0);
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        PPoly h0 = {lc_mod};
        for (std::size_t j = i + 1; j < best.size(); ++j)
            h0 = pmul(F, h0, best[j]);
        ZPoly G, H;
        hensel_pair(F, rest, best[i], h0, k, G, H);
        lifted.push_back(G);
        rest = H;
    }
    {
        // last factor: rest / lc modulo p^k
        Integer lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
        for (auto& c : rest)
            c *= lc_inv;
        mod_into(rest, pk);
        lifted.push_back(rest);
    }

    // Recombination by trial division.
    std::vector<ZPoly> out;
    ZPoly F_rem = f;
    std::vector<ZPoly> pool = lifted;
    for (std::size_t s = 1; 2 * s <= pool.size();) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        const Integer lc = F_rem.back();
        for (;;) {
            // constant-term filter
            Integer c0 = lc;
            for (auto i : idx)
                c0 = symmetric(c0 * (pool[i].empty() ? Integer(0) : pool[i][0]), pk);
            const Integer target0 = lc * F_rem[0];
            bool plausible = (c0 == 0) ? target0 == 0 : mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t()) != 0;
            if (plausible) {
                ZPoly g = {lc};
                for (auto i : idx) {
                    g = zmul(g, pool[i]);
                    mod_into(g, pk);
                }
                g.resize(static_cast<std::size_t>(std::max<long>(0, static_cast<long>(g.size()))));
                for (auto& c : g)
                    c = symmetric(c, pk);
                ztrim(g);
                Integer cont = content(g);
                for (auto& c : g)
                    c /= cont;
                if (g.back() < 0)
                    for (auto& c : g)
                        c = -c;
                bool ok = false;
                ZPoly q = zdiv_exact(F_rem, g, ok);
                if (ok) {
                    out.push_back(g);
                    F_rem = q;
                    std::vector<ZPoly> next;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            next.push_back(pool[i]);
                    pool = std::move(next);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == pool.size() - s + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++s;
    }
    if (F_rem.size() > 1) {
        if (F_rem.back() < 0)
            for (auto& c : F_rem)
                c = -c;
        out.push_back(F_rem);
    }
    return out;
}

}  // namespace esdef::detail
