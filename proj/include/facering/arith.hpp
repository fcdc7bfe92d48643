#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace facering {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the combinatorial convention: zero whenever
/// a < 0, b < 0 or b > a, and binom(0, 0) = 1.
Integer binom(std::int64_t a, std::int64_t b);

Integer factorial(std::int64_t n);

Integer ipow(std::int64_t base, std::int64_t exponent);

/// Floor division for signed operands (rounds toward negative infinity).
std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace facering
