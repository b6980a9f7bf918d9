#include "thetaq/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

QSeries theta_series(int64_t prec) {
  if (prec < 1) throw std::domain_error("theta_series: prec must be >= 1");
  QSeries out(1, prec);
  out.set_coeff(0, CycNumber::one());
  for (int64_t n = 1; n * n < prec; ++n) out.set_coeff(n * n, CycNumber(2));
  return out;
}

QSeries theta_at_4torsion(const FourTorsionClass& c, int64_t prec) {
  if (prec < 1) throw std::domain_error("theta_at_4torsion: prec must be >= 1");
  switch (c.kind) {
    case FourTorsionClass::Kind::Z4:
      return theta_series(prec);
    case FourTorsionClass::Kind::Z4Q2: {
      // q_4 sum q^{n^2+n} = sum of 2 q^{(2n+1)^2/4}
      QSeries out(4, 4 * prec);
      for (int64_t n = 0;; ++n) {
        int64_t key = (2 * n + 1) * (2 * n + 1);
        if (key >= 4 * prec) break;
        out.set_coeff(key, CycNumber(2));
      }
      return out;
    }
    case FourTorsionClass::Kind::Z4kQ4: {
      if (c.k == 2)
        throw std::domain_error(
            "theta_at_4torsion: constant 1/(1+zeta_4^2) undefined for k = 2");
      if (c.k < 0 || c.k > 3)
        throw std::domain_error("theta_at_4torsion: k must be in {0,1,3}");
      // (1+zeta_4^k)^{-1} sum zeta_4^{k n^2} q^{n^2/4}
      CycNumber unit = (CycNumber::one() + CycNumber::zeta(4, c.k)).inverse();
      CycNumber odd_phase = CycNumber::zeta(4, c.k);  // n odd: n^2 = 1 mod 4
      QSeries out(4, 4 * prec);
      out.set_coeff(0, unit);
      for (int64_t n = 1; n * n < 4 * prec; ++n) {
        CycNumber coeff = CycNumber(2) * unit;
        if (n % 2 != 0) coeff *= odd_phase;
        out.set_coeff(n * n, coeff);
      }
      return out;
    }
  }
  throw std::logic_error("theta_at_4torsion: unreachable");
}

namespace {

// sum_n zeta_c^{t n^2} q^{n^2/den} below `num_prec` numerator units
QSeries twisted_theta(int64_t c, int64_t t, int64_t den, int64_t num_prec) {
  QSeries out(den, num_prec);
  out.set_coeff(0, CycNumber::one());
  for (int64_t n = 1; n * n < num_prec; ++n)
    out.set_coeff(n * n, CycNumber(2) * CycNumber::zeta(c, t * n * n));
  return out;
}

}  // namespace

QSeries theta_unit(const ThetaUnitVariant& v, int64_t prec) {
  if (prec < 1) throw std::domain_error("theta_unit: prec must be >= 1");
  QSeries theta_inv = qs_inv(theta_series(prec), prec);

  if (const auto* g = std::get_if<GenericM>(&v)) {
    if (g->m < 1 || g->m % 2 == 0)
      throw std::domain_error("theta_unit: m must be odd positive");
    // (sum zeta_m^{t n^2} q_m^{n^2}) / theta
    QSeries num = twisted_theta(g->m, g->t, g->m, g->m * prec);
    return qs_mul(num, theta_inv);
  }
  if (const auto* s = std::get_if<SubgroupZeta>(&v)) {
    if (!is_odd_prime(s->l))
      throw std::domain_error("theta_unit: l must be an odd prime");
    // l (sum q^{l^2 n^2}) / theta
    QSeries num(1, prec);
    CycNumber l_const(s->l);
    num.set_coeff(0, l_const);
    for (int64_t n = 1; s->l * s->l * n * n < prec; ++n)
      num.set_coeff(s->l * s->l * n * n, CycNumber(2 * s->l));
    return qs_mul(num, theta_inv);
  }
  if (const auto* s = std::get_if<SubgroupZetaQ>(&v)) {
    if (!is_odd_prime(s->l))
      throw std::domain_error("theta_unit: l must be an odd prime");
    if (mod_norm(s->j, s->l) == 0)
      throw std::domain_error("theta_unit: j must be nonzero mod l");
    // (-1/l) g_l(zeta_l^j) (sum zeta_l^{j n^2} q^{n^2}) / theta
    CycNumber g = gauss_sum(s->l, CycNumber::zeta(s->l, s->j));
    CycNumber scalar = jacobi_symbol(-1, s->l) == 1 ? g : -g;
    QSeries num = twisted_theta(s->l, s->j, 1, prec);
    return qs_scale(qs_mul(num, theta_inv), scalar);
  }
  const auto& p = std::get<PrimeLevel>(v);
  if (!is_odd_prime(p.l))
    throw std::domain_error("theta_unit: l must be an odd prime");
  if (mod_norm(p.t, p.l) == 0)
    throw std::domain_error("theta_unit: t must be nonzero mod l");
  // g_l(zeta_l^t) (sum q^{l n^2}) / theta
  CycNumber g = gauss_sum(p.l, CycNumber::zeta(p.l, p.t));
  QSeries num(1, prec);
  num.set_coeff(0, CycNumber::one());
  for (int64_t n = 1; p.l * n * n < prec; ++n)
    num.set_coeff(p.l * n * n, CycNumber(2));
  return qs_scale(qs_mul(num, theta_inv), g);
}

AdjustedExpansion adjust_expansion(const QSeries& raw,
                                   const FourTorsionClass& c, int64_t k) {
  if (k < 1 || k % 2 == 0)
    throw std::domain_error("adjust_expansion: weight k must be odd positive");
  // theta_P^k needs enough precision that the product is limited by raw:
  // prec(out) = min(P_raw + k v_theta, P_theta^k + v_raw) with v_theta >= 0
  int64_t raw_int_prec = ceil_div(raw.prec() - std::min<int64_t>(raw.valuation_key(), 0),
                                  raw.denom());
  int64_t theta_prec = std::max<int64_t>(raw_int_prec + 1, 1);
  QSeries theta_k = qs_pow(theta_at_4torsion(c, theta_prec), k);
  return AdjustedExpansion{qs_mul(raw, theta_k), k, c};
}

int64_t pole_bound(int64_t N, int64_t k, bool over_half) {
  if (N < 1 || k < 1) throw std::domain_error("pole_bound: bad arguments");
  return over_half ? N * k : 0;
}

bool is_holomorphic_expansion(const QSeries& series) {
  return series.known_zero() || series.valuation_key() >= 0;
}

bool is_holomorphic_expansion(const AdjustedExpansion& adj) {
  return is_holomorphic_expansion(adj.series);
}

namespace {

std::complex<double> theta_numeric(std::complex<double> tau, int64_t n_terms) {
  const std::complex<double> two_pi_i(0.0, 6.283185307179586476925287);
  std::complex<double> sum(1.0, 0.0);
  for (int64_t n = 1; n <= n_terms; ++n) {
    sum += 2.0 * std::exp(two_pi_i * (double(n) * double(n)) * tau);
  }
  return sum;
}

}  // namespace

double verify_transformation_law(int64_t a, int64_t b, int64_t c, int64_t d,
                                 std::complex<double> tau, int64_t n_terms) {
  if (a * d - b * c != 1)
    throw std::domain_error("verify_transformation_law: determinant != 1");
  if (mod_norm(c, 4) != 0)
    throw std::domain_error("verify_transformation_law: c must be 0 mod 4");
  if (tau.imag() <= 0)
    throw std::domain_error("verify_transformation_law: tau not in upper half plane");

  std::complex<double> w = std::complex<double>(double(c)) * tau + double(d);
  std::complex<double> gamma_tau =
      (std::complex<double>(double(a)) * tau + double(b)) / w;

  std::complex<double> lhs = theta_numeric(gamma_tau, n_terms);
  std::complex<double> theta_tau = theta_numeric(tau, n_terms);

  // square root with argument in [-pi/2, pi/2): principal branch except on
  // the negative real axis, where the argument flips to -pi/2
  std::complex<double> root = std::sqrt(w);
  if (root.real() == 0.0 && root.imag() > 0.0) root = -root;

  CycNumber eps = epsilon_d(d);
  std::complex<double> eps_inv =
      eps == CycNumber::one() ? std::complex<double>(1.0, 0.0)
                              : std::complex<double>(0.0, -1.0);
  double chi = double(jacobi_symbol(c, d));
  std::complex<double> rhs = eps_inv * chi * root * theta_tau;
  return std::abs(lhs - rhs) / std::abs(theta_tau);
}

}  // namespace thetaq
