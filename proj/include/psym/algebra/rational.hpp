#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace psym {

/// Exact rational number. GMP keeps every result in canonical form
/// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Builds num/den in canonical form. Throws std::domain_error when den is zero.
Rational make_rational(long num, unsigned long den);

/// Parses "num/den" or "num" (optional leading '-'). No decimal or exponent
/// notation is accepted.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace psym
