// Exact rational coefficients on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace thetaq {

using Rational = mpq_class;

// p-adic valuation of a nonzero rational; throws on zero.
int64_t rational_valuation(const Rational& x, int64_t p);

// integer power l^e as an exact rational, e may be negative
Rational rational_power(int64_t base, int64_t exponent);

// floor of a rational
mpz_class rational_floor(const Rational& x);

// parse "p/q" or "p" (canonicalized); throws std::invalid_argument on junk
Rational rational_from_string(const std::string& s);

}  // namespace thetaq
