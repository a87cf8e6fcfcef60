#pragma once

#include "esdef/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace esdef {

/// One simple extension step K_i = K_{i-1}[a_i] / (m_i).
///
/// Elements of a tower of height k are stored flat: a vector of deg(K_k / Q)
/// rationals, where the element is sum_j c_j * a_k^j with each c_j the
/// consecutive block of deg(K_{k-1} / Q) entries. Embedding K_{k-1} into K_k
/// is therefore zero padding.
struct TowerLevel {
    std::string name;
    /// Monic minimal polynomial over the previous level, ascending degree,
    /// each coefficient a flat element of the previous level.
    std::vector<std::vector<Rational>> minpoly;

    std::size_t degree() const { return minpoly.size() - 1; }
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Q(a_1, ..., a_k) presented as a chain of minimal polynomials. Immutable;
/// extensions share the levels of their base.
class FieldTower {
public:
    /// The trivial tower Q.
    static TowerPtr rationals();

    /// Appends a level; `minpoly` must be monic of degree >= 2 (degree-1
    /// collapsing happens in extend_tower).
    static TowerPtr extend(const TowerPtr& base, std::vector<std::vector<Rational>> minpoly);

    std::size_t height() const { return levels_.size(); }
    std::size_t degree() const { return prefix_degree_.back(); }
    /// Degree over Q of the first `height` levels.
    std::size_t prefix_degree(std::size_t height) const { return prefix_degree_[height]; }
    const TowerLevel& level(std::size_t i) const { return *levels_[i]; }

    /// True if this tower's levels are the first levels of `other`.
    bool is_prefix_of(const FieldTower& other) const;

    /// Generator names and minimal polynomials, e.g. "Q(α1 | α1^2-2)".
    std::string describe() const;

private:
    std::vector<std::shared_ptr<const TowerLevel>> levels_;
    std::vector<std::size_t> prefix_degree_{1};
};

/// Element of a FieldTower. A null tower means Q; such elements combine with
/// elements of any tower.
class FieldElement {
public:
    FieldElement() : coeffs_{Rational(0)} {}
    FieldElement(const Rational& q) : coeffs_{q} {}  // NOLINT: implicit by design of the scalar hierarchy
    FieldElement(long v) : coeffs_{Rational(v)} {}    // NOLINT
    FieldElement(TowerPtr tower, std::vector<Rational> coeffs);

    /// The flat basis element with index `index` (a product of generator powers).
    static FieldElement basis(const TowerPtr& tower, std::size_t index);
    /// The top generator of the tower.
    static FieldElement generator(const TowerPtr& tower);

    const TowerPtr& tower() const { return tower_; }
    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True if the element lies in Q.
    bool is_rational() const;
    const Rational& rational_part() const { return coeffs_.front(); }

    /// Zero-padded image in a tower that has this element's tower as prefix.
    FieldElement embed(const TowerPtr& target) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement inverse() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Total order on flat coefficient vectors; only used for canonical sorting.
    friend int compare_canonical(const FieldElement& a, const FieldElement& b);

    /// Q-linear multiplication-by-this matrix on the flat basis.
    std::vector<std::vector<Rational>> multiplication_matrix() const;
    Rational norm() const;

    std::string to_string() const;

private:
    void promote_pair(FieldElement& other);

    TowerPtr tower_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const FieldElement& e) { return e.is_zero(); }
inline std::string to_string(const FieldElement& e) { return e.to_string(); }

/// The tower containing both arguments (one must be a prefix of the other).
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

}  // namespace esdef
