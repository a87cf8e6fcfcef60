#pragma once

#include "esdef/linalg.hpp"
#include "esdef/resolution.hpp"
#include "esdef/standard_basis.hpp"

#include <optional>
#include <vector>

namespace esdef {

/// Exact linear conditions over Q on the coefficients of g (monomials of
/// degree <= D, local order descending) and on section offsets. Columns:
/// offsets first, then g monomials, so elimination removes offsets first.
struct ConditionSystem {
    struct Offset {
        int point;                // free essential non-root point
        std::size_t basis_index;  // flat basis element of the point's field
    };

    int D = 0;
    std::vector<Monomial> g_monomials;
    std::vector<Offset> offsets;
    std::vector<SparseRow> rows;

    std::size_t columns() const { return offsets.size() + g_monomials.size(); }
};

/// Smallest D such that every monomial of degree D + 1 meets all conditions
/// of the cluster (tree, virtual multiplicities) on its own.
int minimal_truncation(const EssentialTree& tree, const std::vector<int>& virtual_mult);

/// Conditions "Taylor coefficients of degree < virtual(q) of g pulled back to
/// q vanish" at every essential q.
ConditionSystem cluster_conditions(const EssentialTree& tree, const std::vector<int>& virtual_mult, int D);

/// First-order equimultiplicity of f + eps g along sections that may move
/// along the exceptional divisor at free points (one offset per free
/// essential non-root point, deg(K_q) rational unknowns each).
ConditionSystem es_fix_conditions(const EssentialTree& tree, int D);

/// An ideal computed from a condition system together with its truncation.
struct TruncatedIdeal {
    IdealPresentation ideal;
    int D = 0;
    long kernel_dimension = 0;  // rank of the projected solution space (degree <= D part of I)
};

/// Projection of the solution space onto g, with all monomials of degree
/// D + 1 adjoined. The echelon basis is returned as a ready standard basis.
TruncatedIdeal solve_conditions(const ConditionSystem& system);

/// virtual_mult indexed like tree.points (markers ignored). `trunc` overrides
/// D and must be at least the minimal sound value (InvalidArgument otherwise).
TruncatedIdeal cluster_ideal(const EssentialTree& tree, const std::vector<int>& virtual_mult,
                             std::optional<int> trunc = std::nullopt);

/// I^s: cluster ideal with the total transform multiplicities. The colength
/// is checked against the degree formula (InternalInconsistency on mismatch).
TruncatedIdeal topological_singularity_ideal(const EssentialTree& tree, std::optional<int> trunc = std::nullopt);
TruncatedIdeal topological_singularity_ideal(const LocalPoly& f);

/// (I^ea, I^ea_fix) = (<f, j(f)>, <f, m j(f)>); NonIsolated if tau is infinite.
std::pair<IdealPresentation, IdealPresentation> tjurina_ideals(const LocalPoly& f);

/// I^es_fix by offset elimination. Default truncation: the smaller of the
/// I^s bound and the degree of the highest corner of I^ea_fix.
TruncatedIdeal es_fix_ideal(const EssentialTree& tree, std::optional<int> trunc = std::nullopt);
TruncatedIdeal es_fix_ideal(const LocalPoly& f);

/// I^es = <j(f)> + I^es_fix.
IdealPresentation es_ideal(const LocalPoly& f, const IdealPresentation& es_fix);
IdealPresentation es_ideal(const LocalPoly& f);

/// <j(f), monomials of Newton order >= 1> (NND) or <j(f), monomials of
/// weighted degree >= d> (SQH). NotApplicable otherwise.
IdealPresentation es_ideal_newton(const LocalPoly& f);

/// Monomial basis of I^es / <f, j(f)> of Newton order >= 1, obtained by
/// reducing candidate monomials in the global order modulo
/// <f, j(f)> + m^(d+1), d = deg of the highest corner.
/// BasisNotMonomial if a reduction leaves a non-monomial.
std::vector<LocalPoly> es_basis_newton(const LocalPoly& f);

/// Every ideal of the deformation chain for one germ, sharing one resolution.
struct DeformationIdeals {
    EssentialTree tree;
    IdealPresentation tjurina;        // I^ea
    IdealPresentation fixed_tjurina;  // I^ea_fix
    TruncatedIdeal s;                 // I^s
    TruncatedIdeal es_fix;            // I^es_fix
    IdealPresentation es;             // I^es
};

/// Smooth germs give unit ideals throughout (the tree is empty).
DeformationIdeals deformation_ideals(const LocalPoly& f, std::optional<int> trunc = std::nullopt);

}  // namespace esdef
