#pragma once

#include "esdef/upoly.hpp"

#include <vector>

namespace esdef {

struct Factor {
    UniPoly poly;  // monic, irreducible over the requested field
    int multiplicity = 1;
};

/// Irreducible factorization over the field `field` (which must contain the
/// coefficients of `p`; null means the coefficient field of `p`).
///
/// Over Q: squarefree decomposition, factorization modulo a prime, Hensel
/// lifting and recombination by trial division. Over a proper tower the
/// problem is reduced to Q through the norm of a shifted polynomial.
/// Output order: degree, then canonical coefficient order.
std::vector<Factor> factor_univariate(const UniPoly& p, const TowerPtr& field = nullptr);

/// Yun's squarefree decomposition of a monic polynomial: entry i has
/// multiplicity i + 1 (entries may be 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// A root of a monic irreducible polynomial `m` over `base`, together with the
/// field it lives in. Degree-1 polynomials give a root in `base` itself.
struct AdjoinedRoot {
    TowerPtr tower;
    FieldElement root;
};

/// Adjoins a root of `m`. With `verify` set, `m` is factored first and
/// ReducibleMinimalPolynomial is raised if it splits.
AdjoinedRoot adjoin_root(const TowerPtr& base, const UniPoly& m, bool verify = false);

/// Tower-only view of adjoin_root.
TowerPtr extend_tower(const TowerPtr& base, const UniPoly& m, bool verify = false);

/// Splits a K-valued linear functional on a rational coefficient space into
/// deg(K/Q) rational functionals with the same common kernel.
std::vector<std::vector<Rational>> restrict_scalars(const std::vector<FieldElement>& row);

namespace detail {

/// Irreducible factors over Z of a primitive squarefree integer polynomial
/// with positive leading coefficient. Factors are primitive.
std::vector<std::vector<Integer>> zassenhaus(const std::vector<Integer>& f);

}  // namespace detail

}  // namespace esdef
