#pragma once

#include "esdef/poly.hpp"

#include <optional>
#include <utility>

namespace esdef {

/// Minimum total degree of the support; nullopt stands for "infinite" (f = 0).
template <class K>
std::optional<int> multiplicity(const BiPoly<K>& f)
{
    return f.order();
}

/// Lowest-degree homogeneous part.
template <class K>
BiPoly<K> tangent_cone(const BiPoly<K>& f);

/// (df/dx, df/dy).
template <class K>
std::pair<BiPoly<K>, BiPoly<K>> jacobian(const BiPoly<K>& f)
{
    return {f.diff_x(), f.diff_y()};
}

}  // namespace esdef

#include "esdef/errors.hpp"

namespace esdef {

template <class K>
BiPoly<K> tangent_cone(const BiPoly<K>& f)
{
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "tangent cone of the zero polynomial");
    return f.homogeneous_part(*f.order());
}

}  // namespace esdef
