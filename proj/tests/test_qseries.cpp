#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "thetaq/intmath.hpp"
#include "thetaq/qseries.hpp"

using namespace thetaq;

namespace {

QSeries theta1(int64_t prec) {
  QSeries out(1, prec);
  out.set_coeff(0, CycNumber::one());
  for (int64_t n = 1; n * n < prec; ++n) out.set_coeff(n * n, CycNumber(2));
  return out;
}

// dense convolution oracle on integer-grid series with rational coefficients
std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b, size_t prec) {
  std::vector<Rational> out(prec, Rational(0));
  for (size_t i = 0; i < a.size() && i < prec; ++i)
    for (size_t j = 0; j < b.size() && i + j < prec; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// long-division oracle: coefficients of 1/f for f with f[0] != 0
std::vector<Rational> long_division_inverse(const std::vector<Rational>& f,
                                            size_t prec) {
  std::vector<Rational> out(prec, Rational(0));
  std::vector<Rational> rem(prec, Rational(0));
  rem[0] = 1;  // divide 1 by f
  for (size_t n = 0; n < prec; ++n) {
    Rational c = rem[n] / f[0];
    out[n] = c;
    for (size_t j = 0; j < f.size() && n + j < prec; ++j)
      rem[n + j] -= c * f[j];
  }
  return out;
}

std::vector<Rational> dense_coeffs(const QSeries& f, size_t prec) {
  std::vector<Rational> out(prec, Rational(0));
  for (const auto& [m, c] : f.terms()) {
    REQUIRE(f.denom() == 1);
    if (m >= 0 && static_cast<size_t>(m) < prec)
      out[m] = c.rational_value();
  }
  return out;
}

QSeries random_series(std::mt19937_64& rng, int64_t prec, int64_t denom = 1,
                      bool unit = false) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int64_t> key(unit ? 1 : 0, prec - 1);
  std::uniform_int_distribution<int> count(3, 12);
  QSeries out(denom, prec);
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c != 0) out.set_coeff(key(rng), CycNumber(c));
  }
  if (unit) out.set_coeff(0, CycNumber::one());
  return out;
}

}  // namespace

TEST_CASE("qs_add basics") {
  QSeries one_plus_q(1, 10);
  one_plus_q.set_coeff(0, CycNumber::one());
  one_plus_q.set_coeff(1, CycNumber::one());
  QSeries other(1, 10);
  other.set_coeff(0, CycNumber(-1));
  other.set_coeff(1, CycNumber::one());

  QSeries sum = qs_add(one_plus_q, other);
  CHECK(sum.terms().size() == 1);
  CHECK(sum.coeff_key(1) == CycNumber(2));

  QSeries zero(1, 10);
  CHECK(overlap_equal(qs_add(one_plus_q, zero), one_plus_q));
}

TEST_CASE("qs_add doubles theta coefficients") {
  QSeries t = theta1(10);
  QSeries d = qs_add(t, t);
  CHECK(d.coeff_key(0) == CycNumber(2));
  CHECK(d.coeff_key(1) == CycNumber(4));
  CHECK(d.coeff_key(4) == CycNumber(4));
  CHECK(d.coeff_key(9) == CycNumber(4));
  CHECK(d.coeff_key(2).is_zero());
}

TEST_CASE("qs_mul basics and the two-squares counts") {
  QSeries a(1, 10), b(1, 10);
  a.set_coeff(0, CycNumber::one());
  a.set_coeff(1, CycNumber::one());
  b.set_coeff(0, CycNumber::one());
  b.set_coeff(1, CycNumber(-1));
  QSeries p = qs_mul(a, b);
  CHECK(p.coeff_key(0) == CycNumber::one());
  CHECK(p.coeff_key(1).is_zero());
  CHECK(p.coeff_key(2) == CycNumber(-1));

  QSeries t = theta1(8);
  QSeries tt = qs_mul(t, t);
  // r_2(n): representations of n as an ordered sum of two squares
  std::vector<int> expected = {1, 4, 4, 0, 4, 8, 0, 0};
  for (size_t n = 0; n < expected.size(); ++n)
    CHECK(tt.coeff_key(n) == CycNumber(expected[n]));
  // brute-force convolution oracle
  auto oracle = convolve(dense_coeffs(t, 8), dense_coeffs(t, 8), 8);
  for (size_t n = 0; n < 8; ++n)
    CHECK(tt.coeff_key(n) == CycNumber(oracle[n]));

  CHECK(overlap_equal(qs_mul(t, QSeries::constant(CycNumber::one(), 8)), t));
}

TEST_CASE("qs_inv: geometric series, theta, constants") {
  QSeries f(1, 10);
  f.set_coeff(0, CycNumber::one());
  f.set_coeff(1, CycNumber(-1));
  QSeries inv = qs_inv(f, 10);
  for (int64_t n = 0; n < 10; ++n) CHECK(inv.coeff_key(n) == CycNumber::one());

  QSeries t = theta1(6);
  QSeries ti = qs_inv(t, 6);
  std::vector<int> expected = {1, -2, 4, -8, 14, -24};
  for (size_t n = 0; n < expected.size(); ++n)
    CHECK(ti.coeff_key(n) == CycNumber(expected[n]));
  // independent long-division oracle
  auto oracle = long_division_inverse(dense_coeffs(t, 6), 6);
  for (size_t n = 0; n < 6; ++n)
    CHECK(ti.coeff_key(n) == CycNumber(oracle[n]));

  QSeries two = QSeries::constant(CycNumber(2), 5);
  CHECK(qs_inv(two, 5).coeff_key(0) == CycNumber(Rational(1, 2)));

  CHECK_THROWS_AS(qs_inv(QSeries(1, 5), 5), std::domain_error);
}

TEST_CASE("qs_inv handles Laurent valuations") {
  // f = q^-1 + 1, inverse = q - q^2 + q^3 - ...
  QSeries f(1, 8);
  f.set_coeff(-1, CycNumber::one());
  f.set_coeff(0, CycNumber::one());
  QSeries inv = qs_inv(f, 8);
  CHECK(overlap_equal(qs_mul(f, inv),
                      QSeries::constant(CycNumber::one(), inv.prec() - 1)));
  CHECK(inv.coeff_key(1) == CycNumber::one());
  CHECK(inv.coeff_key(2) == CycNumber(-1));
}

TEST_CASE("qs_subst: identity, pure reindexing, fractional twist") {
  QSeries t = theta1(20);
  CHECK(overlap_equal(qs_subst(t, {1, 0}), t));

  // theta with (r=9, s=0): exponents n^2 become n^2/9
  QSeries sub = qs_subst(t, {9, 0});
  CHECK(sub.denom() == 9);
  CHECK(coefficient_at(sub, Rational(1, 9)) == CycNumber(2));
  CHECK(coefficient_at(sub, Rational(4, 9)) == CycNumber(2));
  // rescaling exponents by 9 recovers the integer-grid series
  CHECK(overlap_equal(scale_exponents(sub, 9), t));

  // a twist on the quarter grid: coefficient at m/4 gains zeta_4^m
  QSeries h(4, 8);
  h.set_coeff(1, CycNumber(2));  // 2 q^(1/4)
  QSeries tw = qs_subst(h, {1, 1});
  CHECK(tw.coeff_key(1) == CycNumber(2) * CycNumber::zeta(4));
}

TEST_CASE("twist_q multiplies a_n by zeta^n and matches subst+rescale") {
  std::mt19937_64 rng(23);
  QSeries f = random_series(rng, 30);
  QSeries tw = twist_q(f, 3, 1);
  for (const auto& [n, c] : f.terms())
    CHECK(tw.coeff_key(n) == CycNumber::zeta(3, n) * c);
  CHECK(overlap_equal(tw, scale_exponents(qs_subst(f, {3, 1}), 3)));
  CHECK(overlap_equal(twist_q(f, 1, 0), f));
}

TEST_CASE("scale_exponents") {
  QSeries t = theta1(10);
  QSeries s = scale_exponents(t, 9);
  CHECK(s.prec() == 90);
  CHECK(s.coeff_key(0) == CycNumber::one());
  CHECK(s.coeff_key(9) == CycNumber(2));
  CHECK(s.coeff_key(36) == CycNumber(2));
  CHECK(s.coeff_key(81) == CycNumber(2));
  CHECK(overlap_equal(scale_exponents(t, 1), t));

  QSeries q14 = QSeries::monomial(CycNumber::one(), 1, 4, 8);
  QSeries q = scale_exponents(q14, 4);
  CHECK(coefficient_at(q, Rational(1)) == CycNumber::one());
}

TEST_CASE("extract_arithmetic") {
  QSeries t = theta1(900);
  QSeries e = extract_arithmetic(t, 9);
  // 9n is a square iff n is a square
  CHECK(equal_to_power(e, theta1(100), 100));

  std::mt19937_64 rng(29);
  QSeries f = random_series(rng, 40);
  CHECK(overlap_equal(extract_arithmetic(f, 1), f));

  QSeries ones(1, 30);
  for (int64_t n = 0; n < 30; ++n) ones.set_coeff(n, CycNumber::one());
  QSeries e3 = extract_arithmetic(ones, 3);
  for (int64_t n = 0; n < 10; ++n) CHECK(e3.coeff_key(n) == CycNumber::one());

  QSeries frac(4, 8);
  frac.set_coeff(1, CycNumber::one());
  CHECK_THROWS_AS(extract_arithmetic(frac, 3), std::domain_error);
}

TEST_CASE("extract_arithmetic factors through composition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries f = random_series(rng, 600);
    QSeries lhs = extract_arithmetic(f, 6);
    QSeries rhs = extract_arithmetic(extract_arithmetic(f, 2), 3);
    CHECK(overlap_equal(lhs, rhs));
  }
}

TEST_CASE("legendre_twist") {
  QSeries t = theta1(20);
  QSeries w = legendre_twist(t, 3);
  // symbol table mod 3: (1/3) = 1, (2/3) = -1, (0/3) = 0
  CHECK(w.coeff_key(0).is_zero());
  CHECK(w.coeff_key(1) == CycNumber(2));
  CHECK(w.coeff_key(4) == CycNumber(2));
  CHECK(w.coeff_key(9).is_zero());
  CHECK(w.coeff_key(16) == CycNumber(2));

  QSeries c = QSeries::constant(CycNumber(5), 10);
  CHECK(legendre_twist(c, 7).known_zero());

  QSeries q2 = QSeries::monomial(CycNumber::one(), 2, 1, 10);
  CHECK(legendre_twist(q2, 3).coeff_key(2) == CycNumber(-1));
}

TEST_CASE("coefficient_at") {
  QSeries t = theta1(10);
  CHECK(coefficient_at(t, Rational(4)) == CycNumber(2));
  CHECK(coefficient_at(t, Rational(3)).is_zero());
  CHECK_THROWS_AS(coefficient_at(t, Rational(10)), std::domain_error);
  CHECK_THROWS_AS(coefficient_at(t, Rational(11)), std::domain_error);

  // theta at the half cusp: 2 q^(1/4) + 2 q^(9/4) + ...
  QSeries h(4, 40);
  for (int64_t n = 0; (2 * n + 1) * (2 * n + 1) < 40; ++n)
    h.set_coeff((2 * n + 1) * (2 * n + 1), CycNumber(2));
  CHECK(coefficient_at(h, Rational(1, 4)) == CycNumber(2));
  CHECK(coefficient_at(h, Rational(1, 2)).is_zero());
}

TEST_CASE("ring axioms on random sparse series") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    QSeries f = random_series(rng, 25);
    QSeries g = random_series(rng, 25);
    QSeries h = random_series(rng, 25);
    CHECK(overlap_equal(qs_add(f, g), qs_add(g, f)));
    CHECK(overlap_equal(qs_add(qs_add(f, g), h), qs_add(f, qs_add(g, h))));
    CHECK(overlap_equal(qs_mul(f, g), qs_mul(g, f)));
    CHECK(overlap_equal(qs_mul(qs_mul(f, g), h), qs_mul(f, qs_mul(g, h))));
    CHECK(overlap_equal(qs_mul(f, qs_add(g, h)),
                        qs_add(qs_mul(f, g), qs_mul(f, h))));
  }
}

TEST_CASE("substitution composition law") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int64_t> rdist(1, 4);
  std::uniform_int_distribution<int64_t> sdist(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    QSeries f = random_series(rng, 30, trial % 2 == 0 ? 1 : 2);
    int64_t r1 = rdist(rng), r2 = rdist(rng);
    int64_t s1 = sdist(rng), s2 = sdist(rng);
    QSeries two_step = qs_subst(qs_subst(f, {r1, s1}), {r2, s2});
    QSeries one_step = qs_subst(f, {r1 * r2, r2 * s1 + s2});
    CHECK(two_step.denom() == one_step.denom());
    CHECK(two_step.prec() == one_step.prec());
    CHECK(overlap_equal(two_step, one_step));
  }
}

TEST_CASE("qs_inv round trip on random unit series") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    QSeries f = random_series(rng, 30, 1, /*unit=*/true);
    QSeries inv = qs_inv(f, 30);
    QSeries prod = qs_mul(f, inv);
    CHECK(overlap_equal(prod, QSeries::constant(CycNumber::one(), prod.prec())));
  }
}

TEST_CASE("precision bookkeeping: outputs ignore data beyond input precision") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    QSeries f = random_series(rng, 20);
    QSeries g = random_series(rng, 25);
    // same stored terms, but claims knowledge further out and adds a term
    // in the extension region
    QSeries f_ext(f.denom(), f.prec() + 5);
    for (const auto& [m, c] : f.terms()) f_ext.set_coeff(m, c);
    f_ext.set_coeff(f.prec() + 2, CycNumber(7));

    auto check_same_window = [](const QSeries& a, const QSeries& b) {
      // a's claim must not exceed b's, and they must agree on a's window
      REQUIRE(a.prec() * b.denom() <= b.prec() * a.denom());
      CHECK(overlap_equal(a, b));
    };
    check_same_window(qs_add(f, g), qs_add(f_ext, g));
    check_same_window(qs_mul(f, g), qs_mul(f_ext, g));
    check_same_window(qs_subst(f, {3, 1}), qs_subst(f_ext, {3, 1}));
    check_same_window(scale_exponents(f, 2), scale_exponents(f_ext, 2));
    check_same_window(extract_arithmetic(f, 3), extract_arithmetic(f_ext, 3));
    check_same_window(legendre_twist(f, 5), legendre_twist(f_ext, 5));
    if (!f.known_zero() && f.valuation_key() == 0)
      check_same_window(qs_inv(f, 100), qs_inv(f_ext, 100));
  }
}

TEST_CASE("inverse precision is capped by what the input determines") {
  QSeries t = theta1(6);
  QSeries inv = qs_inv(t, 50);
  CHECK(inv.prec() == 6);
  // with nonzero valuation the cap tightens to prec - 2v
  QSeries shifted = qs_mul(QSeries::monomial(CycNumber::one(), 2, 1, 100), t);
  QSeries inv2 = qs_inv(shifted, 50);
  CHECK(inv2.prec() == shifted.prec() - 4);
  CHECK(overlap_equal(qs_mul(shifted, inv2),
                      QSeries::constant(CycNumber::one(), 2)));
}

TEST_CASE("grid reduction and JSON-ready invariants") {
  QSeries f(6, 13);
  f.set_coeff(-6, CycNumber::one());
  f.set_coeff(0, CycNumber(3));
  f.set_coeff(6, CycNumber(5));
  QSeries r = f.reduced_grid();
  CHECK(r.denom() == 1);
  CHECK(r.coeff_key(-1) == CycNumber::one());
  CHECK(r.coeff_key(1) == CycNumber(5));
  CHECK(overlap_equal(r, f));
}
