#pragma once

#include <string>

#include "chebcert/extreal.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// Fixed-point decimal rendering of a value; parses back to within half an
/// ulp of the last printed digit.
struct DecimalString {
  std::string text;
  int fractional_digits = 0;
};

/// Round-half-even rendering with exactly `digits` fractional digits.
/// Exact: the decision is made in integer arithmetic.
DecimalString round_decimal(const Rational& x, int digits);

/// As above; requires the working precision to be at least digits + 8.
DecimalString round_decimal(const ExtReal& x, int digits);

/// Exact value of a fixed-point decimal literal such as "-0.318450784453".
Rational parse_decimal(const std::string& text);

}  // namespace chebcert
