#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cylindric {

// Every coefficient in the library is an exact rational.
using Rational = mpq_class;

// Parses "A/B" or "A" (optional leading minus). Throws std::invalid_argument
// on anything else, including a zero denominator. No floating point.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

// r^e for e >= 0; throws std::domain_error for 0^negative.
Rational power(const Rational& r, int e);

}  // namespace cylindric
