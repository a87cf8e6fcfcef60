#pragma once

#include <compare>
#include <string>

namespace esdef {

struct Monomial {
    int a = 0;  // exponent of x
    int b = 0;  // exponent of y

    int degree() const { return a + b; }
    bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }
    friend Monomial operator*(const Monomial& p, const Monomial& q) { return {p.a + q.a, p.b + q.b}; }
    /// p / q; q must divide p.
    friend Monomial operator/(const Monomial& p, const Monomial& q) { return {p.a - q.a, p.b - q.b}; }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;
};

Monomial lcm(const Monomial& p, const Monomial& q);

/// Storage order of polynomial terms: ascending degree, ties by descending x
/// exponent. It is the descending local order, so it is preserved by
/// multiplication with a monomial.
inline bool storage_less(const Monomial& p, const Monomial& q)
{
    if (p.degree() != q.degree())
        return p.degree() < q.degree();
    return p.a > q.a;
}

enum class MonomialOrder {
    Local,   // "ds": 1 > x > y > x^2 > xy > y^2 > ...
    Global,  // "dp": 1 < y < x < y^2 < xy < x^2 < ...
};

/// Sign of p - q in the order (positive: p is larger).
int compare(const Monomial& p, const Monomial& q, MonomialOrder order);

std::string to_string(MonomialOrder order);

}  // namespace esdef
