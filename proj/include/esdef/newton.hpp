#pragma once

#include "esdef/poly.hpp"

#include <optional>
#include <vector>

namespace esdef {

/// A compact face of the Newton diagram, stored as the functional
/// n(a, b) = b + lambda * a - c, which vanishes on the face and is positive
/// above it. `left` is the end on the larger y exponent.
struct NewtonFace {
    Rational lambda;
    Rational c;
    Monomial left;
    Monomial right;

    Rational eval(const Monomial& m) const { return Rational(m.b) + lambda * m.a - c; }
    std::string to_string() const;  // "y + 3/7x - 6"
};

struct NewtonDiagram {
    std::vector<NewtonFace> faces;  // from the y axis to the x axis
    std::vector<Monomial> vertices;
};

/// Diagram of a convenient polynomial (support meets both axes).
/// DegenerateDiagram for f = 0 or a unit, NotConvenient otherwise.
NewtonDiagram newton_diagram(const LocalPoly& f);

/// min over faces of (b + lambda a) / c: 1 on the diagram, > 1 above it.
Rational newton_order(const Monomial& m, const NewtonDiagram& d);

struct QuasiHomogeneousType {
    int w1;  // weight of x
    int w2;  // weight of y
    int d;
    friend bool operator==(const QuasiHomogeneousType&, const QuasiHomogeneousType&) = default;
};

/// Type of f if it is semiquasihomogeneous: some weight vector makes the
/// principal part (lowest weighted part) an isolated singularity.
std::optional<QuasiHomogeneousType> is_sqh(const LocalPoly& f);

/// Newton non-degeneracy of a convenient f: every face polynomial is
/// squarefree after removing its monomial content. NotReduced if f has
/// non-isolated singularity at 0, NotConvenient as for newton_diagram.
bool is_nnd(const LocalPoly& f);

/// Principal part of f for weights (w1, w2) and its weighted degree.
std::pair<LocalPoly, int> principal_part(const LocalPoly& f, int w1, int w2);

}  // namespace esdef
