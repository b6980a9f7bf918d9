// Small integer number theory shared across the library.
#pragma once

#include <cstdint>
#include <vector>

namespace thetaq {

int64_t gcd_i64(int64_t a, int64_t b);
int64_t lcm_i64(int64_t a, int64_t b);

// least non-negative residue of a mod m (m > 0)
int64_t mod_norm(int64_t a, int64_t m);

// ceil(a / b) for b > 0, a any sign
int64_t ceil_div(int64_t a, int64_t b);

int64_t euler_phi(int64_t n);

bool is_prime(int64_t n);
bool is_odd_prime(int64_t n);
std::vector<int64_t> odd_primes_up_to(int64_t bound);

// Jacobi symbol (c/d) for odd d, with the sign conventions of the classical
// half-integral-weight literature: for d > 0 the standard symbol (periodic in
// c mod d, completely multiplicative in c, zero iff gcd(c,d) > 1); for d < 0,
// (c/d) = (c/|d|) unless both c < 0 and d < 0, in which case an extra factor
// -1 appears.  (0/1) = (0/-1) = 1.
int jacobi_symbol(int64_t c, int64_t d);

}  // namespace thetaq
