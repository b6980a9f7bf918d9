#include "thetaq/rational.hpp"

#include <stdexcept>

namespace thetaq {

int64_t rational_valuation(const Rational& x, int64_t p) {
  if (x == 0) throw std::domain_error("rational_valuation: zero input");
  mpz_class dummy;
  int64_t vnum = static_cast<int64_t>(
      mpz_remove(dummy.get_mpz_t(), x.get_num().get_mpz_t(),
                 mpz_class(p).get_mpz_t()));
  int64_t vden = static_cast<int64_t>(
      mpz_remove(dummy.get_mpz_t(), x.get_den().get_mpz_t(),
                 mpz_class(p).get_mpz_t()));
  return vnum - vden;
}

Rational rational_power(int64_t base, int64_t exponent) {
  mpz_class b(base);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(),
             static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r(p);
  if (exponent < 0) r = 1 / r;
  return r;
}

mpz_class rational_floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace thetaq
