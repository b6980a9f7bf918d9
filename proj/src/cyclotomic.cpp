#include "thetaq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<Rational>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, divisor monic
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (int64_t i = static_cast<int64_t>(num.size()) - 1;
       i >= static_cast<int64_t>(den.size()) - 1; --i) {
    mpz_class c = num[i];
    if (c == 0) continue;
    int64_t shift = i - (static_cast<int64_t>(den.size()) - 1);
    quot[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty())
    throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

ZPoly compute_cyclotomic(int64_t L);

struct PhiCache {
  std::mutex mu;
  std::map<int64_t, ZPoly> z;
  std::map<int64_t, QPoly> q;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

const ZPoly& cyclotomic_z(int64_t L) {
  auto& cache = phi_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.z.find(L);
    if (it != cache.z.end()) return it->second;
  }
  // compute outside the lock: the recursion below takes it again
  ZPoly phi = compute_cyclotomic(L);
  QPoly phi_q(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phi_q[i] = Rational(phi[i]);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.q.emplace(L, std::move(phi_q));
  return cache.z.emplace(L, std::move(phi)).first->second;
}

const QPoly& cyclotomic_q(int64_t L) {
  cyclotomic_z(L);
  auto& cache = phi_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.q.at(L);
}

// Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d
ZPoly compute_cyclotomic(int64_t L) {
  if (L < 1) throw std::domain_error("cyclotomic_polynomial: L must be >= 1");
  ZPoly f(L + 1, 0);
  f[0] = -1;
  f[L] = 1;
  for (int64_t d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    f = divide_exact(std::move(f), cyclotomic_z(d));
  }
  return f;
}

// reduce a rational polynomial (any degree) modulo Phi_L, in place;
// result has exactly phi(L) coordinates
void reduce_mod_phi(QPoly& v, int64_t L) {
  const QPoly& phi = cyclotomic_q(L);
  size_t deg_phi = phi.size() - 1;
  if (v.size() > deg_phi) {
    for (size_t i = v.size(); i-- > deg_phi;) {
      if (v[i] == 0) continue;
      Rational c = v[i];
      v[i] = 0;
      size_t base = i - deg_phi;
      for (size_t j = 0; j < deg_phi; ++j)
        if (phi[j] != 0) v[base + j] -= c * phi[j];
    }
  }
  v.resize(deg_phi);
}

// standard polynomial helpers over Q for the extended Euclid inverse
QPoly poly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly poly_rem_and_quot(QPoly a, const QPoly& b, QPoly& quot) {
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead = b.back();
  for (int64_t i = static_cast<int64_t>(a.size()) - 1;
       i >= static_cast<int64_t>(b.size()) - 1; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    int64_t shift = i - (static_cast<int64_t>(b.size()) - 1);
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  return poly_trim(std::move(a));
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return poly_trim(std::move(a));
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int64_t L) {
  return cyclotomic_z(L);
}

CycNumber::CycNumber() : conductor_(1), coords_{Rational(0)} {}

CycNumber::CycNumber(const Rational& r) : conductor_(1), coords_{r} {}

CycNumber::CycNumber(int64_t n) : conductor_(1), coords_{Rational(n)} {}

CycNumber CycNumber::zero() { return CycNumber(); }

CycNumber CycNumber::one() { return CycNumber(Rational(1)); }

CycNumber CycNumber::zeta(int64_t L, int64_t power) {
  if (L < 1) throw std::domain_error("CycNumber::zeta: conductor must be >= 1");
  power = mod_norm(power, L);
  QPoly v(power + 1, Rational(0));
  v[power] = 1;
  reduce_mod_phi(v, L);
  CycNumber out;
  out.conductor_ = L;
  out.coords_ = std::move(v);
  out.descend_if_rational();
  return out;
}

CycNumber CycNumber::from_coords(int64_t L, std::vector<Rational> coords) {
  if (coords.size() != static_cast<size_t>(euler_phi(L)))
    throw std::invalid_argument("CycNumber::from_coords: need phi(L) coords");
  CycNumber out;
  out.conductor_ = L;
  out.coords_ = std::move(coords);
  out.descend_if_rational();
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

const Rational& CycNumber::rational_value() const {
  if (!is_rational())
    throw std::domain_error("CycNumber::rational_value: not rational");
  return coords_[0];
}

void CycNumber::descend_if_rational() {
  if (conductor_ != 1 && is_rational()) {
    conductor_ = 1;
    coords_.resize(1);
  }
}

CycNumber CycNumber::embedded(int64_t M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw std::domain_error("CycNumber::embedded: conductor does not divide target");
  int64_t step = M / conductor_;
  QPoly v(static_cast<size_t>((coords_.size() - 1) * step + 1), Rational(0));
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) v[i * step] = coords_[i];
  reduce_mod_phi(v, M);
  CycNumber out;
  out.conductor_ = M;
  out.coords_ = std::move(v);
  return out;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  int64_t L = lcm_i64(a.conductor_, b.conductor_);
  CycNumber x = a.embedded(L);
  CycNumber y = b.embedded(L);
  for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
  x.descend_if_rational();
  return x;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  // fast paths keep rational scalars out of the big field
  if (a.conductor_ == 1) {
    if (a.coords_[0] == 0) return CycNumber::zero();
    CycNumber out = b;
    for (auto& c : out.coords_) c *= a.coords_[0];
    return out;
  }
  if (b.conductor_ == 1) return b * a;
  int64_t L = lcm_i64(a.conductor_, b.conductor_);
  CycNumber x = a.embedded(L);
  CycNumber y = b.embedded(L);
  QPoly acc(2 * x.coords_.size(), Rational(0));
  for (size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i] == 0) continue;
    for (size_t j = 0; j < y.coords_.size(); ++j)
      if (y.coords_[j] != 0) acc[i + j] += x.coords_[i] * y.coords_[j];
  }
  reduce_mod_phi(acc, L);
  CycNumber out;
  out.conductor_ = L;
  out.coords_ = std::move(acc);
  out.descend_if_rational();
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& b) {
  *this = *this + b;
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& b) {
  *this = *this * b;
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber::inverse: division by zero");
  if (conductor_ == 1) return CycNumber(Rational(1) / coords_[0]);
  // extended Euclid in Q[x] against Phi_L; Phi_L is irreducible, so any
  // nonzero residue is invertible
  QPoly r0 = cyclotomic_q(conductor_);
  QPoly r1 = poly_trim(coords_);
  QPoly s0 = {};              // coefficient of *this for r0
  QPoly s1 = {Rational(1)};   // coefficient of *this for r1
  while (!(r1.size() == 1)) {
    QPoly quot;
    QPoly r2 = poly_rem_and_quot(std::move(r0), r1, quot);
    QPoly s2 = poly_sub(std::move(s0), poly_mul(quot, s1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r2);
    s1 = std::move(s2);
    if (r1.empty())
      throw std::logic_error("CycNumber::inverse: gcd with Phi_L not constant");
  }
  // r1 = s1 * this + t * Phi, constant; inverse = s1 / r1
  Rational c = r1[0];
  QPoly v = std::move(s1);
  for (auto& x : v) x /= c;
  reduce_mod_phi(v, conductor_);
  CycNumber out;
  out.conductor_ = conductor_;
  out.coords_ = std::move(v);
  out.descend_if_rational();
  return out;
}

CycNumber CycNumber::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result = CycNumber::one();
  CycNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  int64_t L = lcm_i64(a.conductor_, b.conductor_);
  return a.embedded(L).coords_ == b.embedded(L).coords_;
}

bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

std::string CycNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    Rational c = coords_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CycNumber galois_apply(const CycNumber& a, int64_t t) {
  int64_t L = a.conductor();
  t = mod_norm(t, L);
  if (gcd_i64(t, L) != 1)
    throw std::domain_error("galois_apply: exponent not coprime to conductor");
  QPoly v(static_cast<size_t>(L), Rational(0));
  const auto& coords = a.coords();
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) v[mod_norm(static_cast<int64_t>(i) * t, L)] += coords[i];
  reduce_mod_phi(v, L);
  return CycNumber::from_coords(L, std::move(v));
}

CycNumber epsilon_d(int64_t d) {
  if ((d & 1) == 0) throw std::domain_error("epsilon_d: d must be odd");
  return mod_norm(d, 4) == 1 ? CycNumber::one() : CycNumber::zeta(4, 1);
}

CycNumber gauss_sum(int64_t l, const CycNumber& z) {
  if (!is_odd_prime(l)) throw std::domain_error("gauss_sum: l must be an odd prime");
  if (z.pow(l) != CycNumber::one())
    throw std::domain_error("gauss_sum: z is not an l-th root of unity");
  CycNumber sum = CycNumber::zero();
  CycNumber zp = CycNumber::one();
  for (int64_t a = 1; a <= l - 1; ++a) {
    zp *= z;
    int s = jacobi_symbol(a, l);
    if (s == 1)
      sum += zp;
    else
      sum += -zp;
  }
  return sum;
}

}  // namespace thetaq
