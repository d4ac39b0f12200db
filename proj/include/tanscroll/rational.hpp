#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tanscroll {

// Exact rational scalar. GMP keeps results of arithmetic in lowest terms with
// a positive denominator; values built from a numerator/denominator pair must
// go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "3/2", "-4", "0"
std::string to_string(const Rational& q);

// Accepts "7", "-3/4", "+2". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace tanscroll
