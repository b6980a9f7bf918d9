#include "thetaq/intmath.hpp"

#include <numeric>
#include <stdexcept>

namespace thetaq {

int64_t gcd_i64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm_i64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

int64_t mod_norm(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t ceil_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && (a > 0) == (b > 0)) ++q;
  return q;
}

int64_t euler_phi(int64_t n) {
  if (n <= 0) throw std::domain_error("euler_phi: n must be positive");
  int64_t result = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_odd_prime(int64_t n) { return n > 2 && is_prime(n); }

std::vector<int64_t> odd_primes_up_to(int64_t bound) {
  std::vector<int64_t> out;
  for (int64_t n = 3; n <= bound; n += 2)
    if (is_prime(n)) out.push_back(n);
  return out;
}

int jacobi_symbol(int64_t c, int64_t d) {
  if ((d & 1) == 0) throw std::domain_error("jacobi_symbol: even denominator");
  if (d < 0) return jacobi_symbol(c, -d) * (c < 0 ? -1 : 1);
  if (d == 1) return 1;
  c = mod_norm(c, d);
  int result = 1;
  while (c != 0) {
    while ((c & 1) == 0) {
      c >>= 1;
      int64_t r = d & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(c, d);
    if ((c & 3) == 3 && (d & 3) == 3) result = -result;
    c %= d;
  }
  return d == 1 ? result : 0;
}

}  // namespace thetaq
