#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace resnet {

/// Exact arbitrary-precision fraction. mpq_class keeps values canonical
/// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// p/q in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational fraction(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses `p/q`, an integer, or a decimal with optional exponent
/// (`0.25`, `-1.5e-3`) into an exact value. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Combined bit length of numerator and denominator; used to rank pivots.
std::size_t bit_length(const Rational& value);

}  // namespace resnet
