#pragma once

#include "esdef/poly.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace esdef {

struct BasisData {
    std::vector<LocalPoly> elements;  // minimal, monic leading coefficients
    std::vector<Monomial> leads;
    /// Set when the leading ideal has finite colength; every monomial of
    /// larger degree lies in the ideal.
    std::optional<int> corner_degree;
};

/// Wraps elements already known to form a standard basis: drops elements
/// whose leading monomial is divisible by another one, sorts, and records the
/// leading monomials and the corner degree.
BasisData make_basis_data(std::vector<LocalPoly> elements, MonomialOrder order = MonomialOrder::Local);

/// Generators plus an optional cached standard basis (Gröbner basis for the
/// global order). The cache is filled lazily by the query functions below;
/// a presentation is not meant to be shared between threads before that.
class IdealPresentation {
public:
    IdealPresentation() = default;
    explicit IdealPresentation(std::vector<LocalPoly> generators, MonomialOrder order = MonomialOrder::Local);

    /// A presentation whose cached basis is already known to be a standard
    /// basis (used by linear-algebra constructions that produce one directly).
    static IdealPresentation with_known_basis(std::vector<LocalPoly> generators, BasisData basis,
                                              MonomialOrder order = MonomialOrder::Local);

    const std::vector<LocalPoly>& generators() const { return generators_; }
    MonomialOrder order() const { return order_; }
    bool has_basis() const { return basis_ != nullptr; }
    const BasisData& basis() const;

private:
    std::vector<LocalPoly> generators_;
    MonomialOrder order_ = MonomialOrder::Local;
    mutable std::shared_ptr<const BasisData> basis_;
};

/// Sum of ideals (generator concatenation).
IdealPresentation operator+(const IdealPresentation& I, const IdealPresentation& J);

/// Mora's tangent cone algorithm (local order) or Buchberger (global order).
/// Pairs are taken by smallest lcm degree, ties by creation order; reducers in
/// the normal form are chosen by smallest ecart, ties by list order.
IdealPresentation standard_basis(const IdealPresentation& I);

/// Normal form of g. For ideals of finite colength (and for the global order)
/// the result is fully reduced: a combination of standard monomials, unique
/// for a given ideal. Otherwise Mora's weak normal form is returned, which is
/// zero exactly when g lies in the ideal.
LocalPoly normal_form(const LocalPoly& g, const IdealPresentation& I);

bool contains(const IdealPresentation& I, const LocalPoly& g);

/// Number of standard monomials; nullopt when infinite.
std::optional<long> colength(const IdealPresentation& I);

/// Smallest standard monomial in the local order. InfiniteColength if the
/// quotient is infinite.
Monomial highest_corner(const IdealPresentation& I);

/// Standard monomials in descending order.
std::vector<Monomial> quotient_monomials(const IdealPresentation& I);

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J);
/// I contained in J.
bool ideal_contains(const IdealPresentation& J, const IdealPresentation& I);

/// mu = colength of the Jacobian ideal, tau = colength of <f, j(f)>, local
/// order. NonIsolated if infinite.
long milnor_number(const LocalPoly& f);
long tjurina_number(const LocalPoly& f);

IdealPresentation jacobian_ideal(const LocalPoly& f);
IdealPresentation tjurina_ideal(const LocalPoly& f);
/// <f, x j(f), y j(f)>.
IdealPresentation fixed_tjurina_ideal(const LocalPoly& f);

/// Re-reduces candidates modulo I + m^(d+1) in the global degree order, which
/// prefers representatives of high degree. Returns the normal forms.
std::vector<LocalPoly> global_rereduce(const std::vector<LocalPoly>& candidates, const IdealPresentation& I, int d);

/// All monomials of the given degree, x-heaviest first.
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace esdef
