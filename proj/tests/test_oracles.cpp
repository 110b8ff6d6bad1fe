#include "doctest.h"
#include "mfgap/arith.h"
#include "mfgap/oracles.h"

using namespace mfgap;
using namespace mfgap::oracles;

TEST_CASE("Eisenstein series") {
  IntSeries e4 = eisenstein_E(4, 10), e6 = eisenstein_E(6, 10);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 240 * 9);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -504 * 33);
  CHECK_THROWS_AS(eisenstein_E(8, 10), std::invalid_argument);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
  const int64_t b = 60;
  IntSeries e4 = eisenstein_E(4, b), e6 = eisenstein_E(6, b);
  IntSeries lhs = series_mul(series_mul(e4, e4), e4);
  IntSeries sq = series_mul(e6, e6);
  IntSeries d = delta(b);
  for (int64_t n = 0; n <= b; ++n) {
    mpz_class diff = lhs[n] - sq[n];
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 1728) != 0);
    CHECK(diff == 1728 * d[n]);
  }
}

TEST_CASE("eta products") {
  IntSeries d = delta(6);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);

  IntSeries e11 = eta_expand({{1, 2}, {11, 2}}, 10);
  CHECK(e11[0] == 0);
  CHECK(e11[1] == 1);
  CHECK(e11[2] == -2);
  CHECK(e11[3] == -1);
  CHECK(e11[5] == 1);

  IntSeries one = eta_expand({}, 5);
  CHECK(one[0] == 1);
  for (int n = 1; n <= 5; ++n) CHECK(one[n] == 0);

  CHECK_THROWS_AS(eta_expand({{1, 1}}, 5), std::invalid_argument);

  // eta(z)^-24 eta(z)^24 = 1 exercises negative exponents.
  IntSeries inv = eta_expand({{1, -24}, {1, 24}}, 8);
  CHECK(inv[0] == 1);
  for (int n = 1; n <= 8; ++n) CHECK(inv[n] == 0);
}

TEST_CASE("tau is multiplicative") {
  auto tau = tau_table(2500);
  auto t = [&](int64_t n) { return tau[n - 1]; };
  for (int64_t m = 1; m <= 50; ++m)
    for (int64_t n = 1; n <= 50; ++n)
      if (gcd(m, n) == 1) CHECK(t(m * n) == t(m) * t(n));
  for (int64_t p : primes_up_to(13)) {
    mpz_class p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
    CHECK(t(p * p) == t(p) * t(p) - p11);
  }
}

TEST_CASE("level one bases") {
  SpaceBasis b12 = victor_miller_basis(12, 30);
  REQUIRE(b12.dim() == 1);
  auto d = delta(30);
  for (int64_t n = 1; n <= 30; ++n) CHECK(b12.rows[0][n - 1] == d[n]);

  SpaceBasis b16 = victor_miller_basis(16, 30);
  CHECK(b16.dim() == 1);
  CHECK(b16.pivots == std::vector<int64_t>{1});

  SpaceBasis b28 = victor_miller_basis(28, 30);
  CHECK(b28.dim() == 2);
  CHECK(b28.pivots == std::vector<int64_t>{1, 2});

  CHECK(victor_miller_basis(14, 30).dim() == 0);
  CHECK(victor_miller_basis(10, 30).dim() == 0);
}
