#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace probdef {

// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

// Parses `p/q`, an integer, or a finite decimal (`0.95`, `.5`). Decimals are
// converted exactly. Throws Error(kSyntax) or Error(kDenominatorZero).
Rational parse_rational(std::string_view token);

// `p/q`, or `p` when the denominator is 1.
std::string to_compact_string(const Rational& value);

// Always `p/q`, including `1/1` and `0/1`.
std::string to_fraction_string(const Rational& value);

// Fixed-point rendering with round-half-even at `places` digits.
std::string to_decimal_string(const Rational& value, int places);

// Round-half-up (away from zero for the nonnegative values used here) to
// `places` digits, returned as an exact rational.
Rational round_half_up(const Rational& value, int places);

}  // namespace probdef
