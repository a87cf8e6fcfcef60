#include "esdef/monomial.hpp"

#include <algorithm>

namespace esdef {

std::string Monomial::to_string() const
{
    if (a == 0 && b == 0)
        return "1";
    std::string s;
    if (a > 0)
        s += a == 1 ? "x" : "x" + std::to_string(a);
    if (b > 0)
        s += b == 1 ? "y" : "y" + std::to_string(b);
    return s;
}

Monomial lcm(const Monomial& p, const Monomial& q)
{
    return {std::max(p.a, q.a), std::max(p.b, q.b)};
}

int compare(const Monomial& p, const Monomial& q, MonomialOrder order)
{
    if (p == q)
        return 0;
    if (p.degree() != q.degree()) {
        const bool p_lower = p.degree() < q.degree();
        if (order == MonomialOrder::Local)
            return p_lower ? 1 : -1;
        return p_lower ? -1 : 1;
    }
    return p.a > q.a ? 1 : -1;
}

std::string to_string(MonomialOrder order)
{
    return order == MonomialOrder::Local ? "ds" : "dp";
}

}  // namespace esdef
