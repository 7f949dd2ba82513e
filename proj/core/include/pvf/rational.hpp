#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pvf {

// Exact rational in lowest terms (gmpxx keeps arithmetic results canonical).
using Rational = mpq_class;
using Integer = mpz_class;

// Builds p/q in canonical form; q must be nonzero.
Rational make_rational(long p, long q = 1);

// Parses "p", "-p" or "p/q" with decimal integers. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "3", "-1/2".
std::string to_string(const Rational& r);

}  // namespace pvf
