#include "thetaq/cusps.hpp"

#include <sstream>
#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

std::string Cusp::label() const {
  std::ostringstream os;
  if (c == 0)
    os << "inf";
  else
    os << a << "/" << c;
  return os.str();
}

bool gamma1_equivalent(int64_t M, int64_t a1, int64_t c1, int64_t a2,
                       int64_t c2) {
  a1 = mod_norm(a1, M);
  c1 = mod_norm(c1, M);
  a2 = mod_norm(a2, M);
  c2 = mod_norm(c2, M);
  for (int64_t j = 0; j < M; ++j) {
    int64_t at = mod_norm(a1 + j * c1, M);
    if (at == a2 && c1 == c2) return true;
    if (mod_norm(-at, M) == a2 && mod_norm(-c1, M) == c2) return true;
  }
  return false;
}

std::pair<int64_t, int64_t> canonical_cusp_pair(int64_t M, int64_t a,
                                                int64_t c) {
  a = mod_norm(a, M);
  c = mod_norm(c, M);
  // the translation orbit of a mod M under a -> a + j c is a residue mod
  // gcd(c, M); negation flips both signs
  int64_t g = gcd_i64(c, M);
  if (g == 0) g = M;
  int64_t a_plus = mod_norm(a, g);
  int64_t a_minus = mod_norm(-a, g);
  int64_t c_minus = mod_norm(-c, M);
  std::pair<int64_t, int64_t> cand1{a_plus, c};
  std::pair<int64_t, int64_t> cand2{a_minus, c_minus};
  return std::min(cand1, cand2);
}

std::vector<Cusp> enumerate_cusps(int64_t M) {
  if (M < 4) throw std::domain_error("enumerate_cusps: level must be >= 4");
  std::vector<Cusp> out;
  for (int64_t c = 0; c < M; ++c) {
    int64_t g = gcd_i64(c, M);
    if (g == 0) g = M;
    for (int64_t a = 0; a < g; ++a) {
      if (gcd_i64(a, g) != 1) continue;
      if (canonical_cusp_pair(M, a, c) != std::pair<int64_t, int64_t>{a, c})
        continue;
      int64_t width = M / g;
      if (M == 4) {
        // irregular level: widths pinned to (inf, 0, 1/2) = (1, 4, 1)
        if (c == 0)
          width = 1;
        else if (c == 1)
          width = 4;
        else
          width = 1;
      }
      out.push_back(Cusp{M, a, c, width, g});
    }
  }
  return out;
}

int64_t mu_bar(int64_t M) {
  Rational r(M * M, 2);
  int64_t m = M;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r *= Rational(p * p - 1, p * p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r *= Rational(m * m - 1, m * m);
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("mu_bar: non-integer index");
  return r.get_num().get_si();
}

int64_t cusp_count_formula(int64_t M) {
  if (M < 5)
    throw std::domain_error("cusp_count_formula: valid for M >= 5 only");
  int64_t total = 0;
  for (int64_t d = 1; d <= M; ++d)
    if (M % d == 0) total += euler_phi(d) * euler_phi(M / d);
  if (total % 2 != 0) throw std::logic_error("cusp_count_formula: odd sum");
  return total / 2;
}

bool maps_to_half(const Cusp& cusp) {
  if (cusp.level % 4 != 0)
    throw std::domain_error("maps_to_half: level must be divisible by 4");
  return mod_norm(cusp.c, 4) == 2;
}

Level4Cusp level4_image(const Cusp& cusp) {
  if (cusp.level % 4 != 0)
    throw std::domain_error("level4_image: level must be divisible by 4");
  int64_t r = mod_norm(cusp.c, 4);
  if (r == 0) return Level4Cusp::Infinity;
  if (r == 2) return Level4Cusp::Half;
  return Level4Cusp::Zero;
}

Rational QDivisor::degree() const {
  Rational total(0);
  for (const auto& [cusp, coeff] : coefficients) total += coeff;
  return total;
}

QDivisor sigma_divisor(int64_t fourN, int64_t k) {
  if (fourN % 4 != 0)
    throw std::domain_error("sigma_divisor: level must be divisible by 4");
  if (k < 1) throw std::domain_error("sigma_divisor: weight must be positive");
  QDivisor out{fourN, {}};
  for (const Cusp& c : enumerate_cusps(fourN)) {
    if (!maps_to_half(c)) continue;
    Rational coeff(k * c.width, 4);
    coeff.canonicalize();
    out.coefficients.emplace(c, coeff);
  }
  return out;
}

int64_t floor_degree(const QDivisor& d) {
  int64_t total = 0;
  for (const auto& [cusp, coeff] : d.coefficients)
    total += rational_floor(coeff).get_si();
  return total;
}

int64_t genus_gamma1(int64_t M) {
  if (M < 4) throw std::domain_error("genus_gamma1: level must be >= 4");
  if (M == 4) return 0;
  // no elliptic points for M >= 5
  Rational g = 1 + Rational(mu_bar(M), 12) - Rational(cusp_count_formula(M), 2);
  g.canonicalize();
  if (g.get_den() != 1) throw std::logic_error("genus_gamma1: non-integer");
  return g.get_num().get_si();
}

bool base_change_holds(int64_t fourN, int64_t k) {
  return floor_degree(sigma_divisor(fourN, k)) > 2 * genus_gamma1(fourN) - 2;
}

std::optional<int64_t> counterexample_scan(int64_t k, int64_t max_level) {
  for (int64_t level = 4; level <= max_level; level += 4)
    if (!base_change_holds(level, k)) return level;
  return std::nullopt;
}

DegreeIdentityReport degree_identities(int64_t fourN) {
  if (fourN % 4 != 0)
    throw std::domain_error("degree_identities: level must be divisible by 4");
  auto cusps = enumerate_cusps(fourN);

  // (i) theta^4 is a section of omega^2 with divisor Sigma_{4N,4}, and
  // Omega^1 = omega^2(-cusps):  deg Sigma_{4N,4} = (2g - 2) + #cusps
  Rational deg4 = sigma_divisor(fourN, 4).degree();
  deg4.canonicalize();
  if (deg4.get_den() != 1)
    throw std::logic_error("degree_identities: deg Sigma_{4N,4} not integral");
  int64_t deg_sigma4 = deg4.get_num().get_si();
  int64_t omega2 = 2 * genus_gamma1(fourN) - 2 + static_cast<int64_t>(cusps.size());

  // (ii) fiberwise over X_1(4): sum of ramification indices w_c / w_base
  // equals the degree of the degeneracy map for each of the three cusps
  int64_t sums[3] = {0, 0, 0};
  for (const Cusp& c : cusps) {
    switch (level4_image(c)) {
      case Level4Cusp::Infinity:
        sums[0] += c.width;  // base width 1
        break;
      case Level4Cusp::Zero:
        if (c.width % 4 != 0 && fourN != 4)
          throw std::logic_error("degree_identities: width not divisible by 4");
        sums[1] += c.width;  // base width 4, divided below
        break;
      case Level4Cusp::Half:
        sums[2] += c.width;  // base width 1
        break;
    }
  }
  if (sums[1] % 4 != 0)
    throw std::logic_error("degree_identities: zero-fiber sum not divisible");
  sums[1] /= 4;
  int64_t deg_map = mu_bar(fourN) / mu_bar(4);

  DegreeIdentityReport report{fourN,   deg_sigma4, omega2, sums[0],
                              sums[1], sums[2],    deg_map, false};
  report.pass = (deg_sigma4 == omega2) && (sums[0] == deg_map) &&
                (sums[1] == deg_map) && (sums[2] == deg_map) &&
                (mu_bar(fourN) % mu_bar(4) == 0);
  return report;
}

}  // namespace thetaq
