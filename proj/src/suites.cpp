#include "thetaq/suites.hpp"

#include <complex>
#include <random>
#include <sstream>

#include "thetaq/cusps.hpp"
#include "thetaq/hecke.hpp"
#include "thetaq/intmath.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

int Report::passed() const {
  int n = 0;
  for (const auto& c : cases)
    if (c.pass) ++n;
  return n;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

void Report::add(std::string description, bool pass, std::string expected,
                 std::string actual) {
  cases.push_back(CheckCase{std::move(description), pass, std::move(expected),
                            std::move(actual)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.cases) cases.push_back(c);
}

namespace {

std::string show(int64_t v) { return std::to_string(v); }

std::string show_opt(const std::optional<int64_t>& v) {
  return v ? std::to_string(*v) : "none";
}

QSeries random_integral_series(std::mt19937_64& rng, int64_t prec) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int64_t> key(1, prec - 1);
  QSeries out(1, prec);
  int terms = static_cast<int>(prec / 4);
  for (int i = 0; i < terms; ++i) out.set_coeff(key(rng), CycNumber(coeff(rng)));
  out.set_coeff(0, CycNumber::one());
  return out;
}

}  // namespace

Report criterion_counterexample_levels() {
  Report r{"counterexample-levels", {}};
  auto first1 = counterexample_scan(1, 400);
  r.add("first base-change failure at weight 1/2 within 400",
        first1 && *first1 == 20, "20", show_opt(first1));
  auto first3 = counterexample_scan(3, 400);
  r.add("first base-change failure at weight 3/2 within 400",
        first3 && *first3 == 68, "68", show_opt(first3));
  bool below1 = true;
  for (int64_t level = 4; level < 20; level += 4)
    below1 = below1 && base_change_holds(level, 1);
  r.add("all levels below 20 pass at weight 1/2", below1, "pass", below1 ? "pass" : "fail");
  bool below3 = true;
  for (int64_t level = 4; level < 68; level += 4)
    below3 = below3 && base_change_holds(level, 3);
  r.add("all levels below 68 pass at weight 3/2", below3, "pass", below3 ? "pass" : "fail");
  return r;
}

Report criterion_base_change_high_weight() {
  Report r{"base-change-high-weight", {}};
  for (int64_t k : {5, 7, 9}) {
    int64_t failures = 0;
    for (int64_t level = 4; level <= 400; level += 4)
      if (!base_change_holds(level, k)) ++failures;
    std::ostringstream desc;
    desc << "base change holds for all 4N <= 400 at k = " << k;
    r.add(desc.str(), failures == 0, "0 failures", show(failures) + " failures");
  }
  return r;
}

Report criterion_t_l2_oracle() {
  Report r{"t-l2-oracle", {}};
  struct Tuple {
    int64_t level, k, l;
  };
  const Tuple tuples[] = {{4, 1, 3}, {4, 3, 3}, {4, 1, 5}, {20, 1, 3}};
  const int64_t prec = 60;
  std::mt19937_64 rng(101);
  for (const Tuple& tup : tuples) {
    HeckeContext ctx(tup.level, tup.k, Character::trivial(tup.level));
    int64_t big = prec * tup.l * tup.l + 1;
    QSeries theta_big = theta_series(big);
    QSeries theta_k_inv = qs_pow(qs_inv(theta_big, big), tup.k);
    const char* names[] = {"theta", "theta^3", "theta * random"};
    for (int input = 0; input < 3; ++input) {
      QSeries A = input == 0   ? theta_big
                  : input == 1 ? qs_pow(theta_big, 3)
                               : qs_mul(theta_big, random_integral_series(rng, big));
      QSeries raw = qs_mul(A, theta_k_inv);
      AdjustedExpansion closed = t_l2_closed(
          AdjustedExpansion{A, tup.k, FourTorsionClass::inf()}, ctx, tup.l);
      AdjustedExpansion geom = t_l2_geometric(raw, ctx, tup.l, prec);
      bool ok = equal_to_power(closed.series, geom.series, prec);
      std::ostringstream desc;
      desc << "T_{l^2} closed == geometric at (4N,k,l) = (" << tup.level << ","
           << tup.k << "," << tup.l << ") on " << names[input] << ", " << prec
           << " powers";
      r.add(desc.str(), ok, "exact equality", ok ? "equal" : "mismatch");
    }
  }
  return r;
}

Report criterion_theta_eigenform() {
  Report r{"theta-eigenform", {}};
  for (int64_t l : {3, 5, 7}) {
    HeckeContext ctx(4, 1, Character::trivial(4));
    AdjustedExpansion t{theta_series(100 * l * l + 1), 1,
                        FourTorsionClass::inf()};
    AdjustedExpansion out = t_l2_closed(t, ctx, l);
    QSeries expected =
        qs_scale(theta_series(101), CycNumber(1 + Rational(1, l)));
    bool ok = equal_to_power(out.series, expected, 100);
    std::ostringstream desc;
    desc << "T_{l^2} theta = (1 + 1/" << l << ") theta to 100 powers";
    r.add(desc.str(), ok, "exact equality", ok ? "equal" : "mismatch");
  }
  return r;
}

Report criterion_gauss_identities() {
  Report r{"gauss-identities", {}};
  bool squares_ok = true;
  bool twists_ok = true;
  for (int64_t l : odd_primes_up_to(97)) {
    CycNumber z = CycNumber::zeta(l);
    CycNumber g = gauss_sum(l, z);
    if (g * g != CycNumber(Rational(jacobi_symbol(-1, l) * l)))
      squares_ok = false;
    for (int64_t j = 1; j <= l - 1; ++j) {
      CycNumber expected = jacobi_symbol(j, l) == 1 ? g : -g;
      if (gauss_sum(l, z.pow(j)) != expected) twists_ok = false;
    }
  }
  r.add("g_l(zeta)^2 = (-1/l) l for all odd primes l <= 97", squares_ok,
        "exact", squares_ok ? "exact" : "mismatch");
  r.add("g_l(zeta^j) = (j/l) g_l(zeta) for all j", twists_ok, "exact",
        twists_ok ? "exact" : "mismatch");
  return r;
}

Report criterion_u_l() {
  Report r{"u-l", {}};
  const int64_t prec = 60;
  std::mt19937_64 rng(103);
  for (int64_t k : {1, 3}) {
    HeckeContext ctx(12, k, Character::trivial(12));
    CycNumber zeta12 = CycNumber::zeta(12);
    int64_t big = 3 * prec + 1;
    QSeries A = qs_mul(theta_series(big), random_integral_series(rng, big));
    QSeries raw = qs_mul(A, qs_pow(qs_inv(theta_series(big), big), k));
    AdjustedExpansion closed = u_l_closed(
        AdjustedExpansion{A, k, FourTorsionClass::inf()}, ctx, 3, zeta12);
    AdjustedExpansion geom = u_l_geometric(raw, ctx, 3, zeta12, prec);
    bool ok = equal_to_power(closed.series, geom.series, prec);
    std::ostringstream desc;
    desc << "U_l closed == geometric at level 12, l = 3, k = " << k << ", "
         << prec << " powers";
    r.add(desc.str(), ok, "exact equality", ok ? "equal" : "mismatch");
  }
  // squared operator: scalar (-1/3) * 3 for every primitive root choice
  HeckeContext ctx(12, 1, Character::trivial(12));
  QSeries f = random_integral_series(rng, 600);
  AdjustedExpansion af{f, 1, FourTorsionClass::inf()};
  bool squared_ok = true;
  for (int64_t t : {1, 5, 7, 11}) {
    CycNumber zeta = CycNumber::zeta(12, t);
    AdjustedExpansion twice =
        u_l_closed(u_l_closed(af, ctx, 3, zeta), ctx, 3, zeta);
    QSeries expected = qs_scale(extract_arithmetic(f, 9), CycNumber(-3));
    if (!overlap_equal(twice.series, expected)) squared_ok = false;
  }
  r.add("U_l^2 introduces exactly (-1/l) l for every primitive root",
        squared_ok, "scalar -3", squared_ok ? "scalar -3" : "mismatch");
  return r;
}

Report criterion_u_p2() {
  Report r{"u-p2", {}};
  for (int64_t p : {3, 5}) {
    AdjustedExpansion t{theta_series(100 * p * p + 1), 1,
                        FourTorsionClass::inf()};
    AdjustedExpansion out = u_p2(t, p);
    bool ok = equal_to_power(out.series, theta_series(101), 100);
    std::ostringstream desc;
    desc << "U_{p^2} theta = theta at p = " << p << ", 100 powers";
    r.add(desc.str(), ok, "exact equality", ok ? "equal" : "mismatch");
  }
  // valuation monotonicity on 20 random series
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> small(-8, 8);
  std::uniform_int_distribution<int> pw(-2, 2);
  std::uniform_int_distribution<int64_t> key(0, 199);
  auto min_val = [](const QSeries& s, int64_t p) {
    int64_t m = INT64_MAX;
    for (const auto& [n, coeff] : s.terms())
      for (const Rational& c : coeff.coords())
        if (c != 0) m = std::min(m, rational_valuation(c, p));
    return m;
  };
  bool monotone = true;
  int checked = 0;
  while (checked < 20) {
    QSeries f(1, 200);
    for (int i = 0; i < 30; ++i) {
      Rational val(small(rng));
      int v = pw(rng);
      for (int j = 0; j < std::abs(v); ++j) {
        if (v > 0)
          val *= 3;
        else
          val /= 3;
      }
      if (val != 0) f.set_coeff(key(rng), CycNumber(val));
    }
    if (f.known_zero()) continue;
    QSeries out = u_p2(AdjustedExpansion{f, 1, FourTorsionClass::inf()}, 3).series;
    if (out.known_zero()) continue;
    ++checked;
    if (min_val(out, 3) < min_val(f, 3)) monotone = false;
  }
  r.add("U_{p^2} never lowers the minimum coefficient valuation (20 random)",
        monotone, "monotone", monotone ? "monotone" : "violated");
  return r;
}

Report criterion_integrality() {
  Report r{"integrality", {}};
  for (int64_t p : {5, 7}) {
    UnitIntegralityReport report = check_unit_integrality(p, 200);
    std::ostringstream desc;
    desc << "p (Theta_{p^2})^{-1} integral at three cusps, p = " << p
         << ", 200 coefficients";
    std::ostringstream actual;
    actual << "minima " << report.entries[0].min_valuation << ", "
           << report.entries[1].min_valuation << ", "
           << report.entries[2].min_valuation;
    r.add(desc.str(), report.pass, "all minima >= 0", actual.str());
    std::ostringstream desc2;
    desc2 << "un-multiplied Theta_{p^2}^{-1} fails with minimum -1, p = " << p;
    r.add(desc2.str(), report.unmultiplied_min == -1, "-1",
          show(report.unmultiplied_min));
  }
  return r;
}

Report criterion_degree_identities() {
  Report r{"degree-identities", {}};
  bool identities = true;
  bool widths = true;
  bool counts = true;
  for (int64_t level = 4; level <= 200; level += 4) {
    if (!degree_identities(level).pass) identities = false;
    int64_t total = 0;
    for (const Cusp& c : enumerate_cusps(level)) total += c.width;
    if (total != mu_bar(level)) widths = false;
    if (level >= 5 &&
        enumerate_cusps(level).size() !=
            static_cast<size_t>(cusp_count_formula(level)))
      counts = false;
  }
  r.add("omega^2 and fiber degree identities for all 4N <= 200", identities,
        "pass", identities ? "pass" : "fail");
  r.add("total cusp widths = PSL index for all 4N <= 200", widths, "pass",
        widths ? "pass" : "fail");
  r.add("cusp counts match the divisor-sum formula", counts, "pass",
        counts ? "pass" : "fail");
  return r;
}

Report criterion_transformation_law() {
  Report r{"transformation-law", {}};
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<int64_t> small(-12, 12);
  const std::complex<double> samples[3] = {
      {0.0, 1.0}, {0.25, 0.5}, {-1.0 / 3.0, 2.0}};
  double worst = 0.0;
  int tested = 0;
  while (tested < 25) {
    int64_t c = 4 * small(rng);
    int64_t a = small(rng);
    if (c == 0) a = 1;
    if (gcd_i64(a, c) != 1) continue;
    int64_t b = 0, d = 0;
    bool found = false;
    for (d = -50; d <= 50; ++d) {
      if (c == 0) {
        if (a * d == 1) {
          b = small(rng);
          found = true;
        }
      } else if ((a * d - 1) % c == 0) {
        b = (a * d - 1) / c;
        if (b >= -50 && b <= 50) found = true;
      }
      if (found) break;
    }
    if (!found) continue;
    ++tested;
    for (const auto& tau : samples)
      worst = std::max(worst, verify_transformation_law(a, b, c, d, tau, 400));
  }
  std::ostringstream actual;
  actual << "max relative error " << worst;
  r.add("theta transformation law on 25 random Gamma_0(4) matrices, 3 points, "
        "400 terms",
        worst < 1e-8, "< 1e-8", actual.str());
  return r;
}

Report run_suite(const std::string& name) {
  Report r{name, {}};
  if (name == "gauss") {
    r.merge(criterion_gauss_identities());
  } else if (name == "oracle") {
    r.merge(criterion_t_l2_oracle());
    r.merge(criterion_u_l());
    r.merge(criterion_u_p2());
  } else if (name == "eigen") {
    r.merge(criterion_theta_eigenform());
  } else if (name == "degrees") {
    r.merge(criterion_counterexample_levels());
    r.merge(criterion_base_change_high_weight());
    r.merge(criterion_degree_identities());
  } else if (name == "integrality") {
    r.merge(criterion_integrality());
  } else if (name == "transform") {
    r.merge(criterion_transformation_law());
  } else if (name == "all") {
    r.merge(criterion_gauss_identities());
    r.merge(criterion_t_l2_oracle());
    r.merge(criterion_u_l());
    r.merge(criterion_u_p2());
    r.merge(criterion_theta_eigenform());
    r.merge(criterion_counterexample_levels());
    r.merge(criterion_base_change_high_weight());
    r.merge(criterion_degree_identities());
    r.merge(criterion_integrality());
    r.merge(criterion_transformation_law());
  } else {
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace thetaq
