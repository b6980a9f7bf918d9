// Cusps of Gamma_1(M): enumeration with widths, the classification of which
// cusps sit over 1/2 at level 4, the Q-divisor Sigma_{4N,k}, genus and degree
// identities, and the base-change inequality scan.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq {

// a cusp (a : c) of Gamma_1(M), canonical orbit representative
struct Cusp {
  int64_t level;  // M
  int64_t a;
  int64_t c;
  int64_t width;
  int64_t dgcd;  // gcd(c, M)

  friend auto operator<=>(const Cusp& x, const Cusp& y) {
    return std::tie(x.level, x.c, x.a) <=> std::tie(y.level, y.c, y.a);
  }
  friend bool operator==(const Cusp& x, const Cusp& y) {
    return x.level == y.level && x.a == y.a && x.c == y.c;
  }
  std::string label() const;
};

// the raw Gamma_1(M)-equivalence predicate on coprime pairs:
// (a', c') == +-(a + j c, c) mod M for some j
bool gamma1_equivalent(int64_t M, int64_t a1, int64_t c1, int64_t a2,
                       int64_t c2);

// canonical representative of the orbit of (a, c) mod M
std::pair<int64_t, int64_t> canonical_cusp_pair(int64_t M, int64_t a,
                                                int64_t c);

// complete duplicate-free cusp list with widths; M >= 4.
// Widths are M / gcd(c, M) for M >= 5; level 4 is hardcoded
// (infinity: 1, 0: 4, 1/2: 1) because the cusp 1/2 is irregular there.
std::vector<Cusp> enumerate_cusps(int64_t M);

// index of the image of Gamma_1(M) in PSL_2(Z): (M^2/2) prod (1 - p^-2),
// with mu_bar(4) = 6
int64_t mu_bar(int64_t M);

// cusp count by the divisor-sum formula, valid for M >= 5
int64_t cusp_count_formula(int64_t M);

// true iff the cusp maps to 1/2 on X_1(4) under the degeneracy map;
// requires 4 | M.  Test: denominator c = 2 (mod 4).
bool maps_to_half(const Cusp& c);

// which of the three level-4 cusps the degeneracy map sends a cusp to
enum class Level4Cusp { Infinity, Zero, Half };
Level4Cusp level4_image(const Cusp& c);

struct QDivisor {
  int64_t level;
  std::map<Cusp, Rational> coefficients;

  Rational degree() const;
};

// Sigma_{4N,k}: coefficient k w_c / 4 at every cusp over 1/2.
// Defined for any k >= 1 (k = 4 is used by the omega^2 degree identity);
// the half-integral theory reads it at odd k.
QDivisor sigma_divisor(int64_t fourN, int64_t k);

int64_t floor_degree(const QDivisor& d);

// genus of X_1(M): formula 1 + mu_bar/12 - cusps/2 for M >= 5, genus 0 at M = 4
int64_t genus_gamma1(int64_t M);

// deg floor(Sigma_{4N,k}) > 2g - 2
bool base_change_holds(int64_t fourN, int64_t k);

// least level 4N <= max_level (stepping by 4) where the inequality fails
std::optional<int64_t> counterexample_scan(int64_t k, int64_t max_level);

struct DegreeIdentityReport {
  int64_t level;
  // deg Sigma_{4N,4} and its predicted value (2g - 2) + #cusps
  int64_t deg_sigma4;
  int64_t omega2_degree;
  // fiberwise sums of ramification indices over the three level-4 cusps,
  // each predicted to be mu_bar(4N)/mu_bar(4)
  int64_t fiber_sum_infinity;
  int64_t fiber_sum_zero;
  int64_t fiber_sum_half;
  int64_t degeneracy_degree;
  bool pass;
};

DegreeIdentityReport degree_identities(int64_t fourN);

}  // namespace thetaq
