#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ccr {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "2.5e-3".
/// Decimals are converted exactly. Throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" in lowest terms, bare integers for unit denominators.
std::string to_string(const Rational& value);

/// Exact terminating-decimal rendering; nullopt when the denominator has
/// prime factors other than 2 and 5.
std::optional<std::string> to_decimal_string(const Rational& value);

/// Correctly rounded (round-to-nearest, ties-to-even) conversion.
double to_double(const Rational& value);

/// Exact square root if value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace ccr
