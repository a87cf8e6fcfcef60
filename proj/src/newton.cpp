#include "esdef/newton.hpp"

#include "esdef/errors.hpp"
#include "esdef/standard_basis.hpp"
#include "esdef/upoly.hpp"

#include <numeric>

namespace esdef {

namespace {

// Compact faces of the lower-left hull of the support, from the point with
// least x exponent to the point with least y exponent.
std::vector<NewtonFace> hull_faces(const LocalPoly& f)
{
    std::vector<Monomial> pts;
    for (const auto& t : f.terms())
        pts.push_back(t.first);
    Monomial start = pts.front();
    for (const auto& p : pts)
        if (p.a < start.a || (p.a == start.a && p.b < start.b))
            start = p;
    std::vector<NewtonFace> faces;
    Monomial cur = start;
    for (;;) {
        // next vertex: steepest descent, farthest on ties
        bool found = false;
        Monomial best;
        Rational best_slope;
        for (const auto& p : pts) {
            if (p.a <= cur.a || p.b >= cur.b)
                continue;
            Rational slope(p.b - cur.b, p.a - cur.a);
            slope.canonicalize();
            if (!found || slope < best_slope || (slope == best_slope && p.a > best.a)) {
                found = true;
                best = p;
                best_slope = slope;
            }
        }
        if (!found)
            break;
        NewtonFace face;
        face.lambda = -best_slope;
        face.c = Rational(cur.b) + face.lambda * cur.a;
        face.left = cur;
        face.right = best;
        faces.push_back(face);
        cur = best;
    }
    return faces;
}

// Face polynomial along primitive lattice steps from `left` to `right`.
UniPoly face_polynomial(const LocalPoly& f, const Monomial& left, const Monomial& right)
{
    const int da = right.a - left.a, db = left.b - right.b;
    const int g = std::gcd(da, db);
    std::vector<FieldElement> c(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k)
        c[static_cast<std::size_t>(k)] = FieldElement(f.coeff({left.a + k * (da / g), left.b - k * (db / g)}));
    return UniPoly(std::move(c));
}

bool squarefree(const UniPoly& p)
{
    return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

}  // namespace

std::string NewtonFace::to_string() const
{
    std::string out = "y";
    out += " + " + (lambda == 1 ? std::string() : lambda.get_str()) + "x";
    if (c != 0)
        out += (c > 0 ? " - " : " + ") + Rational(abs(c)).get_str();
    return out;
}

NewtonDiagram newton_diagram(const LocalPoly& f)
{
    if (f.is_zero() || *f.order() == 0)
        throw Error(ErrorCode::DegenerateDiagram, "Newton diagram of a zero or unit series");
    bool on_x = false, on_y = false;
    for (const auto& t : f.terms()) {
        on_x |= t.first.b == 0;
        on_y |= t.first.a == 0;
    }
    if (!on_x || !on_y)
        throw Error(ErrorCode::NotConvenient, "f is not convenient: its support misses an axis");
    NewtonDiagram d;
    d.faces = hull_faces(f);
    if (d.faces.empty())
        throw Error(ErrorCode::DegenerateDiagram, "Newton diagram has no compact face");
    d.vertices.push_back(d.faces.front().left);
    for (const auto& face : d.faces)
        d.vertices.push_back(face.right);
    return d;
}

Rational newton_order(const Monomial& m, const NewtonDiagram& d)
{
    Rational best;
    bool first = true;
    for (const auto& face : d.faces) {
        Rational v = (Rational(m.b) + face.lambda * m.a) / face.c;
        if (first || v < best)
            best = v;
        first = false;
    }
    return best;
}

std::pair<LocalPoly, int> principal_part(const LocalPoly& f, int w1, int w2)
{
    int d = -1;
    for (const auto& t : f.terms()) {
        const int v = w1 * t.first.a + w2 * t.first.b;
        if (d < 0 || v < d)
            d = v;
    }
    std::vector<LocalPoly::Term> terms;
    for (const auto& t : f.terms())
        if (w1 * t.first.a + w2 * t.first.b == d)
            terms.push_back(t);
    return {LocalPoly::from_terms(std::move(terms)), d};
}

std::optional<QuasiHomogeneousType> is_sqh(const LocalPoly& f)
{
    if (f.is_zero() || *f.order() == 0)
        return std::nullopt;
    std::vector<std::pair<int, int>> candidates;
    for (const auto& face : hull_faces(f)) {
        // lambda = p/q in lowest terms: q b + p a = q c
        const int p = static_cast<int>(face.lambda.get_num().get_si());
        const int q = static_cast<int>(face.lambda.get_den().get_si());
        candidates.emplace_back(p, q);
    }
    candidates.emplace_back(1, 1);
    for (const auto& [w1, w2] : candidates) {
        auto [f0, d] = principal_part(f, w1, w2);
        Monomial left = f0.terms().front().first, right = left;
        for (const auto& t : f0.terms()) {
            if (t.first.a < left.a)
                left = t.first;
            if (t.first.b < right.b)
                right = t.first;
        }
        // monomial content x^left.a y^right.b must be reduced
        if (left.a > 1 || right.b > 1)
            continue;
        if (!(left == right) && !squarefree(face_polynomial(f0, left, right)))
            continue;
        return QuasiHomogeneousType{w1, w2, d};
    }
    return std::nullopt;
}

bool is_nnd(const LocalPoly& f)
{
    NewtonDiagram d = newton_diagram(f);
    if (!colength(tjurina_ideal(f)))
        throw Error(ErrorCode::NotReduced, "f is not reduced (non-isolated singularity at the origin)");
    for (const auto& face : d.faces)
        if (!squarefree(face_polynomial(f, face.left, face.right)))
            return false;
    return true;
}

}  // namespace esdef
