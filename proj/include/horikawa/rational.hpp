#pragma once

#include <gmpxx.h>

#include <string>

namespace horikawa {

// Exact rationals. GMP arithmetic returns canonical values; the two-argument
// constructor does not, so build fractions with make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "3/2", "-7", "0"
std::string to_string(const Rational& r);

// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);

} // namespace horikawa
