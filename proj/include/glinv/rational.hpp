#ifndef GLINV_RATIONAL_HPP
#define GLINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace glinv {

/// Exact rational in lowest terms. gmpxx keeps results canonical after
/// arithmetic; values built from raw numerator/denominator go through
/// make_rational so the invariant holds from construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "a" or "a/b" (optional sign, b > 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is one, otherwise "a/b".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace glinv

#endif  // GLINV_RATIONAL_HPP
