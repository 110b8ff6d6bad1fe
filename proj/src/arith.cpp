#include "mfgap/arith.h"

#include <algorithm>
#include <stdexcept>

namespace mfgap {

int64_t gcd(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t lcm(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * b;
}

ExtGcd ext_gcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b;
  int64_t old_s = 1, s = 0;
  int64_t old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

int64_t inverse_mod(int64_t a, int64_t n) {
  if (n == 1) return 0;
  ExtGcd e = ext_gcd(mod(a, n), n);
  if (e.g != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod(e.x, n);
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<int64_t> primes_up_to(int64_t n) {
  std::vector<int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
  for (int64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (int64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<std::pair<int64_t, int>> factor(int64_t n) {
  if (n <= 0) throw std::domain_error("factor: n must be positive");
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (auto [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (auto [p, e] : factor(n)) {
    size_t base = out.size();
    int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

int kronecker(int64_t d, int64_t n) {
  if (n <= 0) throw std::domain_error("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    int64_t r = mod(d, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d/n) for odd n.
  int64_t a = mod(d, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int valuation(int64_t n, int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace mfgap
