#include <random>

#include "doctest.h"
#include "mfgap/arith.h"
#include "mfgap/linalg.h"
#include "mfgap/qexpansion.h"

using namespace mfgap;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, int zero_percent) {
  QMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      if (static_cast<int>(rng() % 100) < zero_percent) continue;
      mpq_class x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

}  // namespace

TEST_CASE("arithmetic helpers") {
  CHECK(gcd(12, 18) == 6);
  CHECK(euler_phi(46) == 22);
  CHECK(divisors(12) == std::vector<int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
  CHECK(primes_up_to(20) == std::vector<int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(valuation(48, 2) == 4);
}

TEST_CASE("both echelon algorithms agree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    QMatrix m = random_matrix(rng, r, c, trial % 2 ? 60 : 10);
    if (trial % 5 == 0 && r > 1)
      for (size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3;
    Rref a = rref_fraction_free(m);
    QMatrix copy = m;
    // Force the sparse path by embedding into a larger mostly-zero matrix.
    QMatrix big(r + 10, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) big(i, j) = m(i, j);
    Rref b = rref(big);
    CHECK(a.pivots == b.pivots);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) CHECK(a.reduced(i, j) == b.reduced(i, j));
    CHECK(copy == m);
  }
}

TEST_CASE("kernel, inverse, solve") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = random_matrix(rng, 5, 7, 30);
    QMatrix k = kernel(m);
    CHECK(k.cols() == 7 - rank(m));
    CHECK((m * k).is_zero());
    QMatrix sq = random_matrix(rng, 6, 6, 0);
    if (rank(sq) == 6) {
      CHECK((sq * inverse(sq)).is_identity());
      QVector b(6);
      for (auto& x : b) x = static_cast<long>(rng() % 9);
      auto x = solve(sq, b);
      REQUIRE(x);
      CHECK(sq * *x == b);
    }
  }
  QMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(1, 0) = 2;
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("matrix product matches the definition") {
  std::mt19937_64 rng(3);
  QMatrix a = random_matrix(rng, 4, 5, 20), b = random_matrix(rng, 5, 3, 20);
  QMatrix c = a * b;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 3; ++j) {
      mpq_class s = 0;
      for (size_t l = 0; l < 5; ++l) s += a(i, l) * b(l, j);
      CHECK(c(i, j) == s);
    }
}

TEST_CASE("characteristic polynomial") {
  QMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 3;
  QVector cp = charpoly(m);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 5);
  CHECK(cp[1] == -5);
  CHECK(cp[2] == 1);
  CHECK(poly_eval(cp, m).is_zero());
  std::mt19937_64 rng(5);
  QMatrix r = random_matrix(rng, 6, 6, 40);
  CHECK(poly_eval(charpoly(r), r).is_zero());
}

TEST_CASE("q-expansion operators") {
  QExpansion qp(10);
  qp[5] = 1;
  QExpansion u = apply_up(qp, 5);
  CHECK(u.precision() == 2);
  CHECK(u[1] == 1);
  CHECK(u[2] == 0);

  QExpansion f(6);
  for (int n = 1; n <= 6; ++n) f[n] = n * n - 3;
  QExpansion v = apply_vp(f, 3);
  CHECK(v.precision() == 18);
  CHECK(v.ord() == 3 * *f.ord());
  CHECK(apply_up(v, 3) == f);
  CHECK_THROWS(apply_up(QExpansion(2), 3));

  QExpansion g(3);
  g[1] = 7;
  g[2] = 49;
  CHECK(vp_valuation(g, 7) == 1);
  QExpansion gn = normalize_p(g, 7);
  CHECK(gn[1] == 1);
  CHECK(gn[2] == 7);
  CHECK(vp_valuation(gn, 7) == 0);
  CHECK_FALSE(vp_valuation(QExpansion(3), 7).has_value());
  CHECK_THROWS(normalize_p(QExpansion(3), 7));
  QExpansion h(2);
  h[1] = mpq_class(3, 14);
  CHECK(vp_valuation(h, 7) == -1);
  CHECK(vp_valuation(h.scaled(49), 7) == 1);
}
