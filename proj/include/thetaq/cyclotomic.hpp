// Exact arithmetic in cyclotomic fields Q(zeta_L), plus the quadratic
// symbols and Gauss sums built on top of it.
//
// A CycNumber is a dense coordinate vector in the power basis
// 1, zeta_L, ..., zeta_L^{phi(L)-1} of Q(zeta_L), always reduced modulo the
// L-th cyclotomic polynomial.  Cross-conductor operations embed both
// operands into Q(zeta_lcm) via zeta_M = zeta_L^{L/M} for M | L.  Values
// whose reduced coordinates are rational are descended to conductor 1, so
// rational-heavy computations never pay for a large ambient field.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq {

// Phi_L as an integer polynomial, ascending degree, monic of degree phi(L).
const std::vector<mpz_class>& cyclotomic_polynomial(int64_t L);

class CycNumber {
 public:
  CycNumber();  // zero
  explicit CycNumber(const Rational& r);
  explicit CycNumber(int64_t n);

  static CycNumber zero();
  static CycNumber one();
  // zeta_L^power
  static CycNumber zeta(int64_t L, int64_t power = 1);
  // construct from raw power-basis coordinates (length phi(L))
  static CycNumber from_coords(int64_t L, std::vector<Rational> coords);

  int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // throws std::domain_error if not rational
  const Rational& rational_value() const;

  // image under zeta_L -> zeta_M^{M/L}; requires conductor() | M
  CycNumber embedded(int64_t M) const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  CycNumber& operator+=(const CycNumber& b);
  CycNumber& operator*=(const CycNumber& b);

  // field inverse; throws std::domain_error on zero
  CycNumber inverse() const;
  // a^e, e any integer (negative exponents invert)
  CycNumber pow(int64_t e) const;

  // equality as field elements (compares inside Q(zeta_lcm))
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b);

  std::string to_string() const;

 private:
  int64_t conductor_;
  std::vector<Rational> coords_;

  void descend_if_rational();
};

inline CycNumber operator*(const Rational& r, const CycNumber& a) {
  return CycNumber(r) * a;
}

// Galois automorphism zeta_L -> zeta_L^t; requires gcd(t, L) = 1.
CycNumber galois_apply(const CycNumber& a, int64_t t);

// epsilon_d = 1 for d = 1 (mod 4), zeta_4 for d = -1 (mod 4); d must be odd.
CycNumber epsilon_d(int64_t d);

// quadratic Gauss sum  g_l(z) = sum_{a=1}^{l-1} (a/l) z^a
// for an odd prime l and an l-th root of unity z (z^l = 1).
CycNumber gauss_sum(int64_t l, const CycNumber& z);

}  // namespace thetaq
