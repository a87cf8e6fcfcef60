#pragma once

#include <gmpxx.h>

#include <string>

namespace esdef {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "3/10", "-2", "0".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace esdef
