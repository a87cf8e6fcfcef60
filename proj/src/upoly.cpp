#include "esdef/upoly.hpp"

#include "esdef/errors.hpp"

namespace esdef {

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs)
{
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs)
        c.emplace_back(q);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(const FieldElement& c, std::size_t degree)
{
    std::vector<FieldElement> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

TowerPtr UniPoly::tower() const
{
    TowerPtr t;
    for (const auto& c : coeffs_)
        t = common_tower(t, c.tower());
    return t;
}

bool UniPoly::is_rational() const
{
    for (const auto& c : coeffs_)
        if (!c.is_rational())
            return false;
    return true;
}

std::vector<Rational> UniPoly::rational_coeffs() const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_rational())
            throw Error(ErrorCode::InvalidArgument, "polynomial has irrational coefficients");
        out.push_back(c.rational_part());
    }
    return out;
}

UniPoly UniPoly::monic() const
{
    if (is_zero() || leading().is_one())
        return *this;
    return scaled(leading().inverse());
}

UniPoly UniPoly::scaled(const FieldElement& c) const
{
    std::vector<FieldElement> v = coeffs_;
    for (auto& e : v)
        e *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<FieldElement> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * FieldElement(static_cast<long>(i));
    return UniPoly(std::move(v));
}

FieldElement UniPoly::eval(const FieldElement& t) const
{
    FieldElement acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * t + coeffs_[i];
    return acc;
}

UniPoly UniPoly::shift(const FieldElement& a) const
{
    // Horner in the polynomial ring: ((c_n)(t+a) + c_{n-1})(t+a) + ...
    std::vector<FieldElement> r;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        r.emplace_back();
        for (std::size_t j = r.size() - 1; j > 0; --j)
            r[j] = r[j - 1] + r[j] * a;
        r[0] = r[0] * a + coeffs_[i];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const
{
    std::vector<FieldElement> v = coeffs_;
    for (auto& e : v)
        e = -e;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<FieldElement> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<FieldElement> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

bool operator==(const UniPoly& a, const UniPoly& b)
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (!(a.coeffs_[i] == b.coeffs_[i]))
            return false;
    return true;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    if (a.degree() < b.degree())
        return {UniPoly(), a};
    std::vector<FieldElement> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<FieldElement> q(r.size() - db);
    const FieldElement inv = b.leading().inverse();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero())
            continue;
        FieldElement c = r[i] * inv;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] -= c * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

bool canonical_less(const UniPoly& a, const UniPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = compare_canonical(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElement& c = coeffs_[i];
        if (c.is_zero())
            continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string cs = c.to_string();
        const bool compound = !c.is_rational() && (cs.find_first_of("+-", 1) != std::string::npos);
        std::string term;
        if (mono.empty())
            term = compound ? "(" + cs + ")" : cs;
        else if (c.is_one())
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!out.empty() && term.front() != '-')
            out += "+";
        out += term;
    }
    return out;
}

}  // namespace esdef
