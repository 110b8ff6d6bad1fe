#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mfgap {

/// Elementary integer arithmetic on machine integers. All inputs are small
/// (levels, weights and primes of a few thousand at most).

int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);

/// Non-negative residue of a modulo n (n > 0).
inline int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtGcd {
  int64_t g, x, y;
};
ExtGcd ext_gcd(int64_t a, int64_t b);

/// Inverse of a modulo n; throws std::domain_error if gcd(a, n) != 1.
int64_t inverse_mod(int64_t a, int64_t n);

bool is_prime(int64_t n);
std::vector<int64_t> primes_up_to(int64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<int64_t, int>> factor(int64_t n);
std::vector<int64_t> prime_divisors(int64_t n);
std::vector<int64_t> divisors(int64_t n);

int64_t euler_phi(int64_t n);

/// Kronecker symbol (d/n) for n > 0. At n = 2 it follows the standard
/// convention: 0 if d even, 1 if d = +-1 mod 8, -1 if d = +-3 mod 8.
int kronecker(int64_t d, int64_t n);

/// Exponent of the prime p in n (n != 0).
int valuation(int64_t n, int64_t p);

int64_t ipow(int64_t base, int exp);

}  // namespace mfgap
