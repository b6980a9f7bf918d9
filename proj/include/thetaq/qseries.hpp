// Sparse exact Laurent series in a fractional power q^(1/D) with cyclotomic
// coefficients and explicit precision tracking.
//
// A QSeries stores nonzero coefficients keyed by the exponent numerator m,
// the exponent being m/D.  Coefficients are known exactly for every exponent
// m/D with m < prec (the O(q^(prec/D)) convention); stored keys always
// satisfy m < prec, and the key set is bounded below (finite principal
// part).  Operations on mixed grids rescale to the lcm denominator first;
// every operation reports the largest precision its inputs can justify and
// never stores a term at or beyond it.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "thetaq/cyclotomic.hpp"

namespace thetaq {

// substitution q^(1/D) -> zeta_{rD}^s * q^(1/(rD)): exponent m/D becomes
// m/(rD) and the coefficient at m/D gains the factor zeta_{rD}^{s*m}
struct SubstSpec {
  int64_t scale = 1;  // r >= 1
  int64_t twist = 0;  // s
};

class QSeries {
 public:
  // zero series with the given grid and precision
  QSeries(int64_t denom, int64_t prec);

  static QSeries zero(int64_t prec) { return QSeries(1, prec); }
  static QSeries constant(const CycNumber& c, int64_t prec);
  // c * q^(num/den), known below prec/den
  static QSeries monomial(const CycNumber& c, int64_t num, int64_t den,
                          int64_t prec);

  int64_t denom() const { return denom_; }
  int64_t prec() const { return prec_; }
  const std::map<int64_t, CycNumber>& terms() const { return terms_; }

  // lcm of the conductors of all stored coefficients
  int64_t conductor() const;

  bool known_zero() const { return terms_.empty(); }
  // least stored key, or prec for a series with no known terms
  int64_t valuation_key() const;

  // builder: ignores zero coefficients, rejects keys at or beyond prec
  void set_coeff(int64_t key, const CycNumber& c);
  // coefficient on the numerator grid with no precision check (0 if absent)
  CycNumber coeff_key(int64_t m) const;

  // same series on a coarser/finer grid: denom must be a multiple of the
  // current one
  QSeries rescaled_to_denom(int64_t new_denom) const;
  // divide denom and all keys by their common gcd
  QSeries reduced_grid() const;
  // lower the precision (new_prec <= prec), dropping now-unknown terms
  QSeries truncated(int64_t new_prec) const;

  std::string to_string() const;

 private:
  int64_t denom_;
  int64_t prec_;
  std::map<int64_t, CycNumber> terms_;
};

QSeries qs_add(const QSeries& f, const QSeries& g);
QSeries qs_sub(const QSeries& f, const QSeries& g);
QSeries qs_neg(const QSeries& f);
QSeries qs_mul(const QSeries& f, const QSeries& g);
QSeries qs_scale(const QSeries& f, const CycNumber& c);
// f^k for k >= 1
QSeries qs_pow(const QSeries& f, int64_t k);

// multiplicative inverse up to target_prec (numerator units of f's grid);
// the claimed precision is capped by what f's precision can justify.
// Throws std::domain_error if f has no known leading term.
QSeries qs_inv(const QSeries& f, int64_t target_prec);

// exponent substitution, see SubstSpec
QSeries qs_subst(const QSeries& f, const SubstSpec& spec);

// q -> q^r on exponents: exponent e becomes r*e, precision threshold r*prec
QSeries scale_exponents(const QSeries& f, int64_t r);

// q -> zeta_c^j * q: coefficient at exponent m/D gains zeta_{cD}^{j*m};
// equals scale_exponents(qs_subst(f, {c, j}), c)
QSeries twist_q(const QSeries& f, int64_t c, int64_t j);

// integer-grid coefficient extraction: sum a_n q^n -> sum a_{l*n} q^n.
// Requires integer-exponent support; output lives on the integer grid.
QSeries extract_arithmetic(const QSeries& f, int64_t l);

// a_n -> (n/l) a_n for an odd prime l, (n/l) = 0 when l | n.
// Requires integer-exponent support; output lives on the integer grid.
QSeries legendre_twist(const QSeries& f, int64_t l);

// coefficient at a rational exponent; throws std::domain_error at or beyond
// the known precision
CycNumber coefficient_at(const QSeries& f, const Rational& e);

// equality on the overlap: after rescaling to the common grid, all
// coefficients agree below min(prec_f, prec_g)
bool overlap_equal(const QSeries& f, const QSeries& g);

// true when both series determine all integer exponents below int_powers and
// agree there
bool equal_to_power(const QSeries& f, const QSeries& g, int64_t int_powers);

}  // namespace thetaq
