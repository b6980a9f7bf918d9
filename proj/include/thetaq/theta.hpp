// The concrete series of the theory: theta and its expansions at the three
// cusps of level 4, the modular units Theta_m in their tabulated variants,
// q-expansion adjustment by theta^k, pole bounds, and a floating-point
// spot-checker for the weight-1/2 transformation law.
#pragma once

#include <complex>
#include <cstdint>
#include <variant>

#include "thetaq/qseries.hpp"

namespace thetaq {

// isomorphism class of a point of order 4 on the Tate curve
struct FourTorsionClass {
  enum class Kind { Z4, Z4Q2, Z4kQ4 };
  Kind kind = Kind::Z4;
  int64_t k = 0;  // only for Z4kQ4, k in {0, 1, 3}

  static FourTorsionClass inf() { return {Kind::Z4, 0}; }
  static FourTorsionClass half() { return {Kind::Z4Q2, 0}; }
  static FourTorsionClass zero(int64_t k) { return {Kind::Z4kQ4, k}; }

  bool operator==(const FourTorsionClass&) const = default;
};

// the tabulated Theta_m variants, keyed by the Tate-curve datum they expand at
struct GenericM {        // point with 4P = zeta_m^t q_m, mP = zeta_4
  int64_t m;             // odd positive
  int64_t t;             // any residue mod m
};
struct SubgroupZeta {    // (Tate(q), zeta_4, <zeta_{l^2}>)
  int64_t l;             // odd prime
};
struct SubgroupZetaQ {   // (Tate(q), zeta_4, <zeta_{l^2}^j q_l>)
  int64_t l;             // odd prime
  int64_t j;             // 1 <= j <= l-1 mod l
};
struct PrimeLevel {      // point with 4P = zeta_l^t, lP = zeta_4
  int64_t l;             // odd prime
  int64_t t;             // t not divisible by l
};
using ThetaUnitVariant =
    std::variant<GenericM, SubgroupZeta, SubgroupZetaQ, PrimeLevel>;

// a raw expansion multiplied by theta_P^k; carries the weight so operators
// can refuse mismatches
struct AdjustedExpansion {
  QSeries series;
  int64_t weight_k;
  FourTorsionClass cusp;
};

// theta = 1 + 2 sum_{n>=1} q^{n^2}, known below the given integer power
QSeries theta_series(int64_t prec);

// q-expansion of theta at a 4-torsion class, known below `prec` integer
// powers.  Z4 lives on the integer grid, the others on the quarter grid.
// Z4kQ4 with k = 2 is rejected: its tabulated constant 1/(1+zeta_4^2) is
// undefined.
QSeries theta_at_4torsion(const FourTorsionClass& c, int64_t prec);

// the Theta_m unit expansion for a variant, known below `prec` integer powers
QSeries theta_unit(const ThetaUnitVariant& v, int64_t prec);

// raw * theta_P^k for odd positive k
AdjustedExpansion adjust_expansion(const QSeries& raw,
                                   const FourTorsionClass& c, int64_t k);

// pole-order bound at a cusp of X_1(4N): Nk over the half cusp, 0 elsewhere
int64_t pole_bound(int64_t N, int64_t k, bool over_half);

bool is_holomorphic_expansion(const AdjustedExpansion& adj);
bool is_holomorphic_expansion(const QSeries& series);

// relative error of the transformation law
//   theta((a tau + b)/(c tau + d)) =
//     epsilon_d^{-1} (c/d) (c tau + d)^{1/2} theta(tau)
// for a matrix in Gamma_0(4), evaluated with truncated sums of `n_terms`
// symmetric terms and the square root with argument in [-pi/2, pi/2).
double verify_transformation_law(int64_t a, int64_t b, int64_t c, int64_t d,
                                 std::complex<double> tau, int64_t n_terms);

}  // namespace thetaq
