#include "thetaq/hecke.hpp"

#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

Character Character::trivial(int64_t modulus) {
  std::map<int64_t, CycNumber> values;
  for (int64_t a = 1; a <= modulus; ++a)
    if (gcd_i64(a, modulus) == 1) values.emplace(a % modulus, CycNumber::one());
  return Character(modulus, std::move(values));
}

Character::Character(int64_t modulus, std::map<int64_t, CycNumber> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus < 1) throw std::domain_error("Character: modulus must be positive");
  for (int64_t a = 1; a <= modulus; ++a) {
    bool unit = gcd_i64(a, modulus) == 1;
    auto it = values_.find(a % modulus);
    if (unit && it == values_.end())
      throw std::invalid_argument("Character: missing value at a unit");
    if (!unit && it != values_.end())
      throw std::invalid_argument("Character: value at a non-unit");
  }
  // full multiplicativity table
  for (const auto& [a, va] : values_)
    for (const auto& [b, vb] : values_)
      if (va * vb != values_.at(a * b % modulus_))
        throw std::invalid_argument("Character: not multiplicative");
  // each value is a root of unity: chi(a)^{ord(a)} = 1
  for (const auto& [a, va] : values_) {
    int64_t ord = 1;
    int64_t x = a % modulus_;
    while (x != 1 % modulus_) {
      x = x * a % modulus_;
      ++ord;
    }
    if (va.pow(ord) != CycNumber::one())
      throw std::invalid_argument("Character: value is not a root of unity");
  }
}

CycNumber Character::operator()(int64_t a) const {
  a = mod_norm(a, modulus_);
  auto it = values_.find(a);
  if (it == values_.end())
    throw std::domain_error("Character: evaluated at a non-unit");
  return it->second;
}

HeckeContext::HeckeContext(int64_t level, int64_t weight, Character character)
    : level4N(level), k(weight), chi(std::move(character)) {
  if (level % 4 != 0)
    throw std::domain_error("HeckeContext: level must be divisible by 4");
  if (k < 1 || k % 2 == 0)
    throw std::domain_error("HeckeContext: weight must be odd positive");
  if (chi.modulus() != level)
    throw std::domain_error("HeckeContext: character modulus mismatch");
}

namespace {

void require_good_prime(const HeckeContext& ctx, int64_t l, const char* who) {
  if (!is_odd_prime(l))
    throw std::domain_error(std::string(who) + ": l must be an odd prime");
  if (ctx.level4N % l == 0)
    throw std::domain_error(std::string(who) + ": l divides the level");
}

// integer-grid view shared by the closed operators
QSeries integer_view(const QSeries& f, const char* who) {
  if (f.denom() == 1) return f;
  for (const auto& [m, c] : f.terms())
    if (m % f.denom() != 0)
      throw std::domain_error(std::string(who) + ": fractional support");
  QSeries out(1, ceil_div(f.prec(), f.denom()));
  for (const auto& [m, c] : f.terms()) out.set_coeff(m / f.denom(), c);
  return out;
}

void require_weight(const AdjustedExpansion& A, const HeckeContext& ctx,
                    const char* who) {
  if (A.weight_k != ctx.k)
    throw std::domain_error(std::string(who) + ": weight mismatch");
}

}  // namespace

AdjustedExpansion t_l2_closed(const AdjustedExpansion& A,
                              const HeckeContext& ctx, int64_t l) {
  require_good_prime(ctx, l, "t_l2_closed");
  require_weight(A, ctx, "t_l2_closed");
  QSeries a = integer_view(A.series, "t_l2_closed");

  int64_t ll = l * l;
  CycNumber chi_l = ctx.chi(l);
  CycNumber chi_l2 = ctx.chi(ll);
  int64_t half = (ctx.k - 1) / 2;
  Rational sign = (half % 2 != 0 && jacobi_symbol(-1, l) == -1) ? Rational(-1)
                                                                : Rational(1);
  CycNumber middle_factor = CycNumber(sign * rational_power(l, half - 1)) * chi_l;
  CycNumber last_factor = CycNumber(rational_power(l, ctx.k - 2)) * chi_l2;

  QSeries out(1, ceil_div(a.prec(), ll));
  auto add_at = [&](int64_t n, const CycNumber& c) {
    if (n >= out.prec() || c.is_zero()) return;
    out.set_coeff(n, out.coeff_key(n) + c);
  };
  for (const auto& [n, coeff] : a.terms()) {
    if (n % ll == 0) add_at(n / ll, coeff);  // a_{l^2 n} lands at n
    int s = jacobi_symbol(n, l);
    if (s == 1)
      add_at(n, middle_factor * coeff);
    else if (s == -1)
      add_at(n, -(middle_factor * coeff));
    add_at(n * ll, last_factor * coeff);  // a_{n/l^2} sees n at n*l^2
  }
  return AdjustedExpansion{out, A.weight_k, A.cusp};
}

AdjustedExpansion t_l2_geometric(const QSeries& raw, const HeckeContext& ctx,
                                 int64_t l, int64_t prec) {
  require_good_prime(ctx, l, "t_l2_geometric");
  int64_t ll = l * l;
  QSeries theta = theta_series(prec);
  QSeries theta_inv_k = qs_pow(qs_inv(theta, prec), ctx.k);

  // lone subgroup of roots of unity: quotient scales q by l^2 and moves the
  // point by the diamond <l^2>
  QSeries unit1(1, prec);
  unit1.set_coeff(0, CycNumber(l));
  for (int64_t n = 1; ll * n * n < prec; ++n)
    unit1.set_coeff(ll * n * n, CycNumber(2 * l));
  QSeries term1 = qs_mul(scale_exponents(raw, ll), qs_pow(unit1, ctx.k));
  term1 = qs_scale(term1, ctx.chi(ll % ctx.level4N));

  // the l^2 subgroups <zeta_{l^2}^i q_{l^2}>
  QSeries acc2(ll, prec * ll);
  for (int64_t i = 0; i < ll; ++i) {
    QSeries sub = qs_subst(raw, SubstSpec{ll, i});
    QSeries num(ll, prec * ll);
    num.set_coeff(0, CycNumber::one());
    for (int64_t n = 1; n * n < prec * ll; ++n)
      num.set_coeff(n * n, CycNumber(2) * CycNumber::zeta(ll, i * n * n));
    acc2 = qs_add(acc2, qs_mul(sub, qs_pow(num, ctx.k)));
  }

  // the l-1 subgroups <zeta_{l^2}^j q_l>: quotient twists q by zeta_l^j and
  // moves the point by <l>
  QSeries acc3(1, prec);
  for (int64_t j = 1; j <= l - 1; ++j) {
    QSeries sub = twist_q(raw, l, j);
    QSeries num(1, prec);
    num.set_coeff(0, CycNumber::one());
    for (int64_t n = 1; n * n < prec; ++n)
      num.set_coeff(n * n, CycNumber(2) * CycNumber::zeta(l, j * n * n));
    CycNumber g = gauss_sum(l, CycNumber::zeta(l, j));
    CycNumber scalar = (jacobi_symbol(-1, l) == 1 ? g : -g).pow(ctx.k);
    acc3 = qs_add(acc3, qs_scale(qs_mul(sub, qs_pow(num, ctx.k)), scalar));
  }
  acc3 = qs_scale(acc3, ctx.chi(l));

  QSeries total = qs_add(qs_mul(qs_add(term1, acc2), theta_inv_k),
                         qs_mul(acc3, theta_inv_k));
  total = qs_scale(total, CycNumber(Rational(1, ll)));
  QSeries adjusted = qs_mul(total, qs_pow(theta, ctx.k));
  return AdjustedExpansion{adjusted.reduced_grid(), ctx.k,
                           FourTorsionClass::inf()};
}

namespace {

void require_level_prime(const HeckeContext& ctx, int64_t l, const char* who) {
  if (!is_odd_prime(l))
    throw std::domain_error(std::string(who) + ": l must be an odd prime");
  if ((ctx.level4N / 4) % l != 0)
    throw std::domain_error(std::string(who) + ": l does not divide level/4");
}

void require_primitive_root(const CycNumber& zeta, int64_t order,
                            const char* who) {
  if (zeta.pow(order) != CycNumber::one())
    throw std::domain_error(std::string(who) + ": not a root of unity of the level order");
  for (int64_t p = 2; p <= order; ++p) {
    if (order % p != 0 || !is_prime(p)) continue;
    if (zeta.pow(order / p) == CycNumber::one())
      throw std::domain_error(std::string(who) + ": root of unity not primitive");
  }
}

}  // namespace

AdjustedExpansion u_l_closed(const AdjustedExpansion& A,
                             const HeckeContext& ctx, int64_t l,
                             const CycNumber& zeta_choice) {
  require_level_prime(ctx, l, "u_l_closed");
  require_weight(A, ctx, "u_l_closed");
  require_primitive_root(zeta_choice, ctx.level4N, "u_l_closed");
  CycNumber g = gauss_sum(l, zeta_choice.pow(ctx.level4N / l));
  QSeries out = qs_scale(extract_arithmetic(A.series, l), g);
  return AdjustedExpansion{out, A.weight_k, A.cusp};
}

AdjustedExpansion u_l_geometric(const QSeries& raw, const HeckeContext& ctx,
                                int64_t l, const CycNumber& zeta_choice,
                                int64_t prec) {
  require_level_prime(ctx, l, "u_l_geometric");
  require_primitive_root(zeta_choice, ctx.level4N, "u_l_geometric");
  CycNumber g = gauss_sum(l, zeta_choice.pow(ctx.level4N / l));

  QSeries theta = theta_series(prec);
  QSeries acc(l, prec * l);
  for (int64_t i = 0; i < l; ++i) {
    // unit at <zeta_l^i q_l>: g * theta(q) / theta(zeta_l^i q_l)
    QSeries sub_theta = qs_subst(theta_series(prec * l), SubstSpec{l, i});
    QSeries unit = qs_scale(qs_mul(theta, qs_inv(sub_theta, prec * l)), g);
    QSeries unit_inv_k = qs_pow(qs_inv(unit, prec * l), ctx.k);
    QSeries sub_raw = qs_subst(raw, SubstSpec{l, i});
    acc = qs_add(acc, qs_mul(sub_raw, unit_inv_k));
  }
  acc = qs_scale(acc, CycNumber(Rational(1, l)));
  QSeries adjusted = qs_mul(acc, qs_pow(theta, ctx.k));
  // the sum carries g^{-k}; rescale by g^{k+1} = ((-1/l) l)^{(k+1)/2} to the
  // closed-form normalization
  adjusted = qs_scale(adjusted, g.pow(ctx.k + 1));
  return AdjustedExpansion{adjusted.reduced_grid(), ctx.k,
                           FourTorsionClass::inf()};
}

AdjustedExpansion u_p2(const AdjustedExpansion& A, int64_t p) {
  if (!is_prime(p)) throw std::domain_error("u_p2: p must be prime");
  return AdjustedExpansion{extract_arithmetic(A.series, p * p), A.weight_k,
                           A.cusp};
}

std::optional<int64_t> coeff_valuation(const CycNumber& x, int64_t p) {
  if (!is_prime(p)) throw std::domain_error("coeff_valuation: p must be prime");
  if (x.conductor() % p == 0)
    throw std::domain_error("coeff_valuation: p ramifies in the conductor");
  if (x.is_zero()) return std::nullopt;
  std::optional<int64_t> min;
  for (const Rational& c : x.coords()) {
    if (c == 0) continue;
    int64_t v = rational_valuation(c, p);
    if (!min || v < *min) min = v;
  }
  return min;
}

namespace {

// coordinate-wise minimum valuation over all coefficients of a series;
// no unramifiedness requirement (the integrality check uses conductors
// divisible by p, where coordinates >= 0 still certify integrality)
int64_t series_min_valuation(const QSeries& f, int64_t p) {
  bool seen = false;
  int64_t min = 0;
  for (const auto& [m, coeff] : f.terms()) {
    for (const Rational& c : coeff.coords()) {
      if (c == 0) continue;
      int64_t v = rational_valuation(c, p);
      if (!seen || v < min) {
        min = v;
        seen = true;
      }
    }
  }
  if (!seen) throw std::domain_error("series_min_valuation: zero series");
  return min;
}

}  // namespace

UnitIntegralityReport check_unit_integrality(int64_t p, int64_t prec) {
  if (!is_odd_prime(p))
    throw std::domain_error("check_unit_integrality: p must be an odd prime");
  if (prec < 2)
    throw std::domain_error("check_unit_integrality: prec too small");

  // Theta_{p^2} at the three cusps; each series inverted to `prec`
  // coefficients on its own grid
  QSeries at_zeta = theta_unit(SubgroupZeta{p}, prec);
  QSeries at_zeta_q = theta_unit(SubgroupZetaQ{p, 1}, prec);
  QSeries at_q = theta_unit(GenericM{p * p, 0}, ceil_div(prec, p * p) + 1);

  CycNumber pc{Rational(p)};
  QSeries inv_zeta = qs_inv(at_zeta, prec);
  QSeries s1 = qs_scale(inv_zeta, pc);
  QSeries s2 = qs_scale(qs_inv(at_zeta_q, prec), pc);
  QSeries s3 = qs_scale(qs_inv(at_q.truncated(prec), prec), pc);

  UnitIntegralityReport report;
  report.p = p;
  report.entries[0] = {"<zeta_p2>", series_min_valuation(s1, p)};
  report.entries[1] = {"<zeta_p2 q_p>", series_min_valuation(s2, p)};
  report.entries[2] = {"<q_p2>", series_min_valuation(s3, p)};
  report.unmultiplied_min = series_min_valuation(inv_zeta, p);
  report.pass = report.entries[0].min_valuation >= 0 &&
                report.entries[1].min_valuation >= 0 &&
                report.entries[2].min_valuation >= 0;
  return report;
}

}  // namespace thetaq
