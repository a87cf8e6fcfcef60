#pragma once

#include "esdef/tower.hpp"

#include <string>
#include <utility>
#include <vector>

namespace esdef {

/// Dense univariate polynomial over a field tower, ascending coefficients.
/// The zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<FieldElement> coeffs);
    static UniPoly from_rationals(const std::vector<Rational>& coeffs);
    static UniPoly monomial(const FieldElement& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement(); }
    const FieldElement& leading() const { return coeffs_.back(); }
    /// The smallest tower containing every coefficient (null for Q).
    TowerPtr tower() const;
    bool is_rational() const;
    std::vector<Rational> rational_coeffs() const;

    UniPoly monic() const;
    UniPoly derivative() const;
    FieldElement eval(const FieldElement& t) const;
    /// p(t + a).
    UniPoly shift(const FieldElement& a) const;
    UniPoly scaled(const FieldElement& c) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    /// Text in the variable `var`, highest degree first: "c^2-2", "c-α1".
    std::string to_string(const std::string& var = "c") const;

private:
    void trim();
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Canonical ordering for monic factors: degree, then coefficients from the
/// constant term upward.
bool canonical_less(const UniPoly& a, const UniPoly& b);

}  // namespace esdef
