#include "esdef/tower.hpp"

#include "esdef/errors.hpp"
#include "esdef/linalg.hpp"

#include <span>
#include <sstream>

namespace esdef {

TowerPtr FieldTower::rationals()
{
    static const TowerPtr q = std::make_shared<FieldTower>();
    return q;
}

TowerPtr FieldTower::extend(const TowerPtr& base, std::vector<std::vector<Rational>> minpoly)
{
    if (minpoly.size() < 3)
        throw Error(ErrorCode::InvalidArgument, "extension needs a minimal polynomial of degree >= 2");
    for (auto& c : minpoly)
        if (c.size() != base->degree())
            throw Error(ErrorCode::InvalidArgument, "minimal polynomial coefficients live in the wrong field");
    auto level = std::make_shared<TowerLevel>();
    level->name = "α" + std::to_string(base->height() + 1);
    level->minpoly = std::move(minpoly);
    auto tower = std::make_shared<FieldTower>(*base);
    tower->prefix_degree_.push_back(base->degree() * level->degree());
    tower->levels_.push_back(std::move(level));
    return tower;
}

bool FieldTower::is_prefix_of(const FieldTower& other) const
{
    if (levels_.size() > other.levels_.size())
        return false;
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i] != other.levels_[i])
            return false;
    return true;
}

namespace {

using CSpan = std::span<const Rational>;

void add_into(std::span<Rational> out, CSpan a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
}

bool all_zero(CSpan a)
{
    for (const auto& q : a)
        if (!is_zero(q))
            return false;
    return true;
}

// Product of two flat elements of the first `height` levels.
std::vector<Rational> mul_flat(const FieldTower& tower, std::size_t height, CSpan a, CSpan b)
{
    if (height == 0)
        return {a[0] * b[0]};
    const TowerLevel& level = tower.level(height - 1);
    const std::size_t d = level.degree();
    const std::size_t sub = tower.prefix_degree(height - 1);
    std::vector<Rational> tmp((2 * d - 1) * sub);
    for (std::size_t i = 0; i < d; ++i) {
        CSpan ai = a.subspan(i * sub, sub);
        if (all_zero(ai))
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            CSpan bj = b.subspan(j * sub, sub);
            if (all_zero(bj))
                continue;
            auto prod = mul_flat(tower, height - 1, ai, bj);
            add_into(std::span<Rational>(tmp).subspan((i + j) * sub, sub), prod);
        }
    }
    for (std::size_t i = 2 * d - 2; i >= d; --i) {
        CSpan top(tmp.data() + i * sub, sub);
        if (all_zero(top))
            continue;
        std::vector<Rational> c(top.begin(), top.end());
        for (std::size_t j = 0; j < d; ++j) {
            auto prod = mul_flat(tower, height - 1, c, level.minpoly[j]);
            std::span<Rational> dst(tmp.data() + (i - d + j) * sub, sub);
            for (std::size_t k = 0; k < sub; ++k)
                dst[k] -= prod[k];
        }
        for (std::size_t k = 0; k < sub; ++k)
            tmp[i * sub + k] = 0;
    }
    tmp.resize(d * sub);
    return tmp;
}

std::string generator_monomial(const FieldTower& tower, std::size_t index)
{
    std::string out;
    for (std::size_t lvl = tower.height(); lvl-- > 0;) {
        const std::size_t block = tower.prefix_degree(lvl);
        const std::size_t e = index / block;
        index %= block;
        if (e == 0)
            continue;
        std::string factor = tower.level(lvl).name;
        if (e > 1)
            factor += "^" + std::to_string(e);
        out = out.empty() ? factor : factor + "*" + out;
    }
    return out;
}

}  // namespace

std::string FieldTower::describe() const
{
    if (levels_.empty())
        return "Q";
    std::ostringstream os;
    os << "Q(";
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const auto& lvl = *levels_[i];
        if (i)
            os << "; ";
        os << lvl.name << ": ";
        bool first = true;
        for (std::size_t e = lvl.minpoly.size(); e-- > 0;) {
            FieldElement c;
            if (i == 0) {
                c = FieldElement(lvl.minpoly[e][0]);
            } else {
                // coefficients live in the prefix of height i
                auto prefix = std::make_shared<FieldTower>();
                prefix->levels_.assign(levels_.begin(), levels_.begin() + static_cast<long>(i));
                prefix->prefix_degree_.assign(prefix_degree_.begin(), prefix_degree_.begin() + static_cast<long>(i) + 1);
                c = FieldElement(prefix, lvl.minpoly[e]);
            }
            if (c.is_zero())
                continue;
            std::string cs = c.to_string();
            bool compound = !c.is_rational();
            std::string mono = e == 0 ? "" : (e == 1 ? lvl.name : lvl.name + "^" + std::to_string(e));
            std::string term;
            if (mono.empty())
                term = compound ? "(" + cs + ")" : cs;
            else if (c.is_one())
                term = mono;
            else if (!compound && cs == "-1")
                term = "-" + mono;
            else
                term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
            if (!first && term.front() != '-')
                os << "+";
            os << term;
            first = false;
        }
    }
    os << ")";
    return os.str();
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b)
{
    if (!a || a == b)
        return b;
    if (!b)
        return a;
    if (a->is_prefix_of(*b))
        return b;
    if (b->is_prefix_of(*a))
        return a;
    throw Error(ErrorCode::IncompatibleFields, "elements from unrelated field towers");
}

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs))
{
    if (tower_ && tower_->height() == 0)
        tower_.reset();
    const std::size_t deg = tower_ ? tower_->degree() : 1;
    if (coeffs_.size() != deg)
        throw Error(ErrorCode::InvalidArgument, "flat coefficient vector has the wrong length");
}

FieldElement FieldElement::basis(const TowerPtr& tower, std::size_t index)
{
    std::vector<Rational> c(tower ? tower->degree() : 1);
    c.at(index) = 1;
    return FieldElement(tower, std::move(c));
}

FieldElement FieldElement::generator(const TowerPtr& tower)
{
    if (!tower || tower->height() == 0)
        throw Error(ErrorCode::InvalidArgument, "Q has no generator");
    return basis(tower, tower->prefix_degree(tower->height() - 1));
}

bool FieldElement::is_zero() const
{
    return all_zero(coeffs_);
}

bool FieldElement::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    return all_zero(CSpan(coeffs_).subspan(1));
}

bool FieldElement::is_rational() const
{
    return all_zero(CSpan(coeffs_).subspan(1));
}

FieldElement FieldElement::embed(const TowerPtr& target) const
{
    if (!target || target->height() == 0)
        return *this;
    if (tower_ && !tower_->is_prefix_of(*target))
        throw Error(ErrorCode::IncompatibleFields, "cannot embed into an unrelated tower");
    if (tower_ == target)
        return *this;
    std::vector<Rational> c(target->degree());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i];
    return FieldElement(target, std::move(c));
}

void FieldElement::promote_pair(FieldElement& other)
{
    if (tower_ == other.tower_)
        return;
    TowerPtr t = common_tower(tower_, other.tower_);
    if (tower_ != t)
        *this = embed(t);
    if (other.tower_ != t)
        other = other.embed(t);
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& q : r.coeffs_)
        q = -q;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    if (tower_ == o.tower_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    FieldElement b = o;
    promote_pair(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    if (tower_ == o.tower_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    FieldElement b = o;
    promote_pair(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    if (o.is_rational() && (!o.tower_ || (tower_ && o.tower_->is_prefix_of(*tower_)))) {
        const Rational s = o.coeffs_[0];
        for (auto& q : coeffs_)
            q *= s;
        return *this;
    }
    if (is_rational() && (!tower_ || (o.tower_ && tower_->is_prefix_of(*o.tower_)))) {
        const Rational s = coeffs_[0];
        *this = o;
        for (auto& q : coeffs_)
            q *= s;
        return *this;
    }
    FieldElement b = o;
    promote_pair(b);
    coeffs_ = mul_flat(*tower_, tower_->height(), coeffs_, b.coeffs_);
    return *this;
}

std::vector<std::vector<Rational>> FieldElement::multiplication_matrix() const
{
    const std::size_t n = coeffs_.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        FieldElement col = *this * basis(tower_, j);
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = col.coeffs_[i];
    }
    return m;
}

Rational FieldElement::norm() const
{
    if (!tower_)
        return coeffs_[0];
    return determinant(multiplication_matrix());
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by zero in field tower");
    if (is_rational()) {
        FieldElement r = *this;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    std::vector<Rational> rhs(coeffs_.size());
    rhs[0] = 1;
    auto x = solve(multiplication_matrix(), rhs);
    if (!x)
        throw Error(ErrorCode::InternalInconsistency, "singular multiplication matrix: minimal polynomial not irreducible");
    return FieldElement(tower_, std::move(*x));
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    if (a.tower_ == b.tower_)
        return a.coeffs_ == b.coeffs_;
    FieldElement x = a;
    FieldElement y = b;
    x.promote_pair(y);
    return x.coeffs_ == y.coeffs_;
}

int compare_canonical(const FieldElement& a, const FieldElement& b)
{
    FieldElement x = a;
    FieldElement y = b;
    x.promote_pair(y);
    // Highest basis index first so that "x + α" and "x - α" order by the α part.
    for (std::size_t i = x.coeffs_.size(); i-- > 0;) {
        int c = cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string FieldElement::to_string() const
{
    if (!tower_)
        return coeffs_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (esdef::is_zero(c))
            continue;
        std::string mono = generator_monomial(*tower_, i);
        std::string term;
        if (mono.empty())
            term = c.get_str();
        else if (c == 1)
            term = mono;
        else if (c == -1)
            term = "-" + mono;
        else
            term = c.get_str() + "*" + mono;
        if (!out.empty() && term.front() != '-')
            out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace esdef
