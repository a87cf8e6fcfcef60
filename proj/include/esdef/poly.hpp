#pragma once

#include "esdef/monomial.hpp"
#include "esdef/rational.hpp"
#include "esdef/tower.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace esdef {

/// Bivariate polynomial in x, y with coefficients in K (Rational or
/// FieldElement). Terms are kept in storage order (see storage_less) with no
/// zero coefficients, so equality is structural.
template <class K>
class BiPoly {
public:
    using Term = std::pair<Monomial, K>;

    BiPoly() = default;
    BiPoly(const K& c)  // NOLINT: constants promote
    {
        if (!esdef::is_zero(c))
            terms_.emplace_back(Monomial{}, c);
    }
    static BiPoly term(const Monomial& m, const K& c)
    {
        BiPoly p;
        if (!esdef::is_zero(c))
            p.terms_.emplace_back(m, c);
        return p;
    }
    static BiPoly x() { return term({1, 0}, K(1)); }
    static BiPoly y() { return term({0, 1}, K(1)); }

    /// Collects arbitrary (possibly repeated, unsorted) terms.
    static BiPoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& s, const Term& t) { return storage_less(s.first, t.first); });
        BiPoly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else {
                if (!p.terms_.empty() && esdef::is_zero(p.terms_.back().second))
                    p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && esdef::is_zero(p.terms_.back().second))
            p.terms_.pop_back();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Lowest total degree of the support (the multiplicity at the origin).
    std::optional<int> order() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.front().first.degree();
    }
    int max_degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }

    K coeff(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return storage_less(t.first, k); });
        if (it != terms_.end() && it->first == m)
            return it->second;
        return K(0);
    }

    /// Leading term with respect to `order`; the polynomial must be nonzero.
    const Term& leading(MonomialOrder order) const
    {
        if (order == MonomialOrder::Local)
            return terms_.front();
        const int d = terms_.back().first.degree();
        std::size_t i = terms_.size() - 1;
        while (i > 0 && terms_[i - 1].first.degree() == d)
            --i;
        return terms_[i];
    }

    BiPoly homogeneous_part(int d) const
    {
        BiPoly p;
        for (const auto& t : terms_)
            if (t.first.degree() == d)
                p.terms_.push_back(t);
        return p;
    }

    /// Terms of degree <= d.
    BiPoly truncated(int d) const
    {
        BiPoly p;
        for (const auto& t : terms_) {
            if (t.first.degree() > d)
                break;
            p.terms_.push_back(t);
        }
        return p;
    }

    BiPoly operator-() const
    {
        BiPoly p = *this;
        for (auto& t : p.terms_)
            t.second = -t.second;
        return p;
    }

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) { return merge(p, K(1), Monomial{}, q); }
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) { return merge(p, K(-1), Monomial{}, q); }
    BiPoly& operator+=(const BiPoly& q) { return *this = *this + q; }
    BiPoly& operator-=(const BiPoly& q) { return *this = *this - q; }

    /// p + c * m * q in one merge pass.
    static BiPoly merge(const BiPoly& p, const K& c, const Monomial& m, const BiPoly& q)
    {
        BiPoly r;
        r.terms_.reserve(p.terms_.size() + q.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < p.terms_.size() || j < q.terms_.size()) {
            if (j == q.terms_.size()) {
                r.terms_.push_back(p.terms_[i++]);
                continue;
            }
            const Monomial mq = q.terms_[j].first * m;
            if (i == p.terms_.size() || storage_less(mq, p.terms_[i].first)) {
                r.terms_.emplace_back(mq, c * q.terms_[j].second);
                ++j;
            } else if (p.terms_[i].first == mq) {
                K s = p.terms_[i].second + c * q.terms_[j].second;
                if (!esdef::is_zero(s))
                    r.terms_.emplace_back(mq, std::move(s));
                ++i;
                ++j;
            } else {
                r.terms_.push_back(p.terms_[i++]);
            }
        }
        return r;
    }

    BiPoly scaled(const K& c) const
    {
        if (esdef::is_zero(c))
            return {};
        BiPoly p = *this;
        for (auto& t : p.terms_)
            t.second *= c;
        return p;
    }

    BiPoly shifted(const Monomial& m) const
    {
        BiPoly p = *this;
        for (auto& t : p.terms_)
            t.first = t.first * m;
        return p;
    }

    /// Product keeping only terms of degree <= max_deg (negative: no limit).
    static BiPoly mul_truncated(const BiPoly& p, const BiPoly& q, int max_deg)
    {
        if (p.is_zero() || q.is_zero())
            return {};
        std::map<std::pair<int, int>, K> acc;  // key (degree, -a) is storage order
        for (const auto& s : p.terms_) {
            if (max_deg >= 0 && s.first.degree() + q.terms_.front().first.degree() > max_deg)
                break;
            for (const auto& t : q.terms_) {
                const Monomial m = s.first * t.first;
                if (max_deg >= 0 && m.degree() > max_deg)
                    break;
                auto [it, fresh] = acc.try_emplace({m.degree(), -m.a}, s.second * t.second);
                if (!fresh)
                    it->second += s.second * t.second;
            }
        }
        BiPoly r;
        for (auto& [k, v] : acc)
            if (!esdef::is_zero(v))
                r.terms_.emplace_back(Monomial{-k.second, k.first + k.second}, std::move(v));
        return r;
    }
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) { return mul_truncated(p, q, -1); }

    BiPoly diff_x() const
    {
        BiPoly p;
        for (const auto& t : terms_)
            if (t.first.a > 0)
                p.terms_.emplace_back(Monomial{t.first.a - 1, t.first.b}, t.second * K(static_cast<long>(t.first.a)));
        return from_terms(std::move(p.terms_));
    }
    BiPoly diff_y() const
    {
        BiPoly p;
        for (const auto& t : terms_)
            if (t.first.b > 0)
                p.terms_.emplace_back(Monomial{t.first.a, t.first.b - 1}, t.second * K(static_cast<long>(t.first.b)));
        return from_terms(std::move(p.terms_));
    }

    friend bool operator==(const BiPoly& p, const BiPoly& q)
    {
        if (p.terms_.size() != q.terms_.size())
            return false;
        for (std::size_t i = 0; i < p.terms_.size(); ++i)
            if (!(p.terms_[i].first == q.terms_[i].first) || !(p.terms_[i].second == q.terms_[i].second))
                return false;
        return true;
    }

    /// Applies `fn` to every coefficient, producing a polynomial over L.
    template <class L, class Fn>
    BiPoly<L> map(Fn fn) const
    {
        std::vector<typename BiPoly<L>::Term> t;
        t.reserve(terms_.size());
        for (const auto& s : terms_)
            t.emplace_back(s.first, fn(s.second));
        return BiPoly<L>::from_terms(std::move(t));
    }

    /// Singular-style text: "y6+x7y3+x10y3+x17", "3/10x-51/10". Terms in
    /// storage order (descending local order) or descending global order.
    std::string to_string(MonomialOrder order = MonomialOrder::Local) const
    {
        if (terms_.empty())
            return "0";
        std::vector<const Term*> seq;
        for (const auto& t : terms_)
            seq.push_back(&t);
        if (order == MonomialOrder::Global)
            std::stable_sort(seq.begin(), seq.end(), [](const Term* s, const Term* t) {
                return compare(s->first, t->first, MonomialOrder::Global) > 0;
            });
        std::string out;
        for (const Term* t : seq) {
            std::string cs = esdef::to_string(t->second);
            const bool compound = cs.find_first_of("+-*", 1) != std::string::npos;
            const bool unit_mono = t->first == Monomial{};
            std::string term;
            if (compound)
                term = "(" + cs + ")" + (unit_mono ? "" : t->first.to_string());
            else if (unit_mono)
                term = cs;
            else if (cs == "1")
                term = t->first.to_string();
            else if (cs == "-1")
                term = "-" + t->first.to_string();
            else
                term = cs + t->first.to_string();
            if (!out.empty() && term.front() != '-')
                out += "+";
            out += term;
        }
        return out;
    }

private:
    std::vector<Term> terms_;
};

using LocalPoly = BiPoly<Rational>;
using TowerPoly = BiPoly<FieldElement>;

inline TowerPoly to_tower(const LocalPoly& p)
{
    return p.map<FieldElement>([](const Rational& q) { return FieldElement(q); });
}

/// p^e truncated at degree max_deg (negative: no limit).
template <class K>
BiPoly<K> power_truncated(const BiPoly<K>& p, int e, int max_deg)
{
    BiPoly<K> r(K(1));
    BiPoly<K> base = p;
    while (e > 0) {
        if (e & 1)
            r = BiPoly<K>::mul_truncated(r, base, max_deg);
        e >>= 1;
        if (e)
            base = BiPoly<K>::mul_truncated(base, base, max_deg);
    }
    return r;
}

/// p(X, Y) keeping terms of degree <= max_deg (negative: no limit). When X
/// and Y have no constant term the truncation is exact in low degrees.
template <class K>
BiPoly<K> compose(const BiPoly<K>& p, const BiPoly<K>& X, const BiPoly<K>& Y, int max_deg)
{
    int amax = 0, bmax = 0;
    for (const auto& t : p.terms()) {
        amax = std::max(amax, t.first.a);
        bmax = std::max(bmax, t.first.b);
    }
    std::vector<BiPoly<K>> xp{BiPoly<K>(K(1))}, yp{BiPoly<K>(K(1))};
    for (int i = 1; i <= amax; ++i)
        xp.push_back(BiPoly<K>::mul_truncated(xp.back(), X, max_deg));
    for (int i = 1; i <= bmax; ++i)
        yp.push_back(BiPoly<K>::mul_truncated(yp.back(), Y, max_deg));
    std::vector<typename BiPoly<K>::Term> acc;
    for (const auto& t : p.terms()) {
        BiPoly<K> m = BiPoly<K>::mul_truncated(xp[t.first.a], yp[t.first.b], max_deg);
        for (const auto& s : m.terms())
            acc.emplace_back(s.first, s.second * t.second);
    }
    return BiPoly<K>::from_terms(std::move(acc));
}

}  // namespace esdef
