#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nsymkit {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", with "/q" dropped when q == 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. The two-argument mpq_class constructor does not reduce.
Rational fraction(const Integer& num, const Integer& den);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// (-1)^k for any integer k.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace nsymkit
