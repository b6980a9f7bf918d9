// Hecke operators on adjusted q-expansions: closed coefficient formulas for
// T_{l^2}, U_l, U_{p^2}, and independent geometric oracles that re-enact the
// Tate-curve subgroup sums defining the operators; p-integrality checks for
// the unit (p Theta_{p^2})^{-1}.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "thetaq/theta.hpp"

namespace thetaq {

// Dirichlet character mod 4N with root-of-unity values
class Character {
 public:
  static Character trivial(int64_t modulus);
  // validates full multiplicativity and that each value is a root of unity
  Character(int64_t modulus, std::map<int64_t, CycNumber> values);

  int64_t modulus() const { return modulus_; }
  // chi(a) for gcd(a, modulus) = 1; throws on non-units
  CycNumber operator()(int64_t a) const;

 private:
  int64_t modulus_;
  std::map<int64_t, CycNumber> values_;
};

struct HeckeContext {
  int64_t level4N;  // divisible by 4
  int64_t k;        // odd positive weight numerator
  Character chi;    // modulus = level4N

  HeckeContext(int64_t level, int64_t weight, Character character);
};

// T_{l^2} by the closed coefficient formula
//   b_n = a_{l^2 n} + chi(l) (-1/l)^{(k-1)/2} l^{(k-1)/2 - 1} (n/l) a_n
//         + chi(l^2) l^{k-2} a_{n/l^2}
// for an odd prime l coprime to 2*level.  Requires integer-exponent support.
AdjustedExpansion t_l2_closed(const AdjustedExpansion& A,
                              const HeckeContext& ctx, int64_t l);

// T_{l^2} as the Tate-curve subgroup sum (1/l^2) * [ sum over the lone
// subgroup of roots of unity, the l^2 subgroups <zeta^i q_{l^2}>, and the
// l-1 subgroups <zeta^j q_l> ], each term weighted by the matching
// Theta_{l^2}^k expansion, re-adjusted by theta^k at the end.
// `raw` is the expansion before theta-adjustment; supply it to l^2 * prec
// integer powers to determine `prec` powers of the output.
AdjustedExpansion t_l2_geometric(const QSeries& raw, const HeckeContext& ctx,
                                 int64_t l, int64_t prec);

// U_l for an odd prime l dividing level/4:
//   sum a_n q^n  ->  g_l(zeta^{4N/l}) sum a_{ln} q^n
// with zeta a primitive 4N-th root of unity.
AdjustedExpansion u_l_closed(const AdjustedExpansion& A,
                             const HeckeContext& ctx, int64_t l,
                             const CycNumber& zeta_choice);

// U_l as the sum over the subgroups <zeta_l^i q_l>, 0 <= i < l, of the
// substituted raw expansion times the inverted prime-level unit, re-adjusted
// by theta^k.  The subgroup sum produces g^{-k} sum a_{ln} q^n; the result is
// rescaled by g^{k+1} = ((-1/l) l)^{(k+1)/2}, fixing the unit's constant so
// the closed-form effect holds exactly.
AdjustedExpansion u_l_geometric(const QSeries& raw, const HeckeContext& ctx,
                                int64_t l, const CycNumber& zeta_choice,
                                int64_t prec);

// U_{p^2}: sum a_n q^n -> sum a_{p^2 n} q^n
AdjustedExpansion u_p2(const AdjustedExpansion& A, int64_t p);

// min over power-basis coordinates of the p-adic valuation; exact
// p-integrality test for p unramified in the coefficient field.
// nullopt encodes +infinity (the zero element).  Requires p prime to the
// conductor.
std::optional<int64_t> coeff_valuation(const CycNumber& x, int64_t p);

struct UnitIntegralityReport {
  int64_t p;
  struct Entry {
    std::string cusp;
    int64_t min_valuation;
  };
  std::array<Entry, 3> entries;
  // min valuation of the un-multiplied inverse at the <zeta_{p^2}> cusp
  int64_t unmultiplied_min;
  bool pass;  // all three minima >= 0
};

// p-integrality of p * Theta_{p^2}^{-1} at the three cusps
// <zeta_{p^2}>, <zeta_{p^2} q_p>, <q_{p^2}>; each series is carried to
// `prec` coefficients on its own q-power grid.
UnitIntegralityReport check_unit_integrality(int64_t p, int64_t prec);

}  // namespace thetaq
