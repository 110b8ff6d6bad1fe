#include <numeric>
#include <random>

#include "brute.h"
#include "doctest.h"
#include "mfgap/arith.h"
#include "mfgap/invariants.h"

using namespace mfgap;
using namespace mfgap::invariants;

TEST_CASE("strong types reject invalid values") {
  CHECK_THROWS_AS(Level(0), std::invalid_argument);
  CHECK_THROWS_AS(Weight(3), std::invalid_argument);
  CHECK_THROWS_AS(Weight(0), std::invalid_argument);
  CHECK_NOTHROW(Weight(2));
}

TEST_CASE("index") {
  CHECK(index(Level(1)) == 1);
  CHECK(index(Level(46)) == 72);
  CHECK(brute::p1_count(46) == 72);
  CHECK(index(Level(19)) == 20 * index(Level(1)));
  for (int64_t n = 1; n <= 60; ++n) CHECK(index(Level(n)) == brute::p1_count(n));
}

TEST_CASE("elliptic point counts") {
  CHECK(eps2(Level(4)) == 0);
  CHECK(eps2(Level(29)) == 2);
  CHECK(eps3(Level(29)) == 0);
  CHECK(eps3(Level(19)) == 2);
  for (int64_t n = 1; n <= 300; ++n) {
    CHECK(eps2(Level(n)) == brute::eps2(n));
    CHECK(eps3(Level(n)) == brute::eps3(n));
  }
}

TEST_CASE("kronecker convention at 2") {
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(eps2(Level(2)) == 1);
  CHECK(eps3(Level(2)) == 0);
}

TEST_CASE("cusp count") {
  CHECK(eps_inf(Level(1)) == 1);
  CHECK(eps_inf(Level(46)) == 4);
  CHECK(brute::cusp_count(46) == 4);
  CHECK(eps_inf(Level(19)) == 2 * eps_inf(Level(1)));
  for (int64_t n = 1; n <= 80; ++n) CHECK(eps_inf(Level(n)) == brute::cusp_count(n));
}

TEST_CASE("genus") {
  CHECK(genus(Level(1)) == 0);
  CHECK(genus(Level(19)) == 1);
  CHECK(genus(Level(46)) == 5);
  for (int64_t n = 1; n <= 10000; ++n) CHECK_NOTHROW(genus(Level(n)));
}

TEST_CASE("multiplicativity on coprime pairs") {
  for (int64_t a = 1; a <= 200; ++a)
    for (int64_t b = a; a * b <= 40000 && b <= 200; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Level la(a), lb(b), lab(a * b);
      CHECK(index(lab) == index(la) * index(lb));
      CHECK(eps2(lab) == eps2(la) * eps2(lb));
      CHECK(eps3(lab) == eps3(la) * eps3(lb));
      CHECK(eps_inf(lab) == eps_inf(la) * eps_inf(lb));
    }
}

TEST_CASE("level raising by a prime") {
  for (int64_t p : primes_up_to(100))
    for (int64_t n = 1; n <= 100; ++n) {
      if (n % p == 0) continue;
      CHECK(eps_inf(Level(p * n)) == 2 * eps_inf(Level(n)));
      CHECK(index(Level(p * n)) == (p + 1) * index(Level(n)));
      for (int64_t k = 4; k <= 24; k += 2)
        CHECK(dim_sk(Level(p * n), Weight(k)) - 2 * dim_sk(Level(n), Weight(k)) >= 0);
    }
}

TEST_CASE("dimension formula") {
  CHECK(dim_sk(Level(19), Weight(16)) == 24);
  CHECK(dim_sk(Level(46), Weight(12)) == 64);
  CHECK(dim_sk(Level(29), Weight(28)) == 67);
  CHECK(dim_sk(Level(4), Weight(4)) == 0);
  CHECK(dim_sk(Level(1), Weight(28)) == 2);
  CHECK(dim_sk(Level(1), Weight(16)) == 1);
  CHECK(dim_sk(Level(2), Weight(12)) == 2);
  CHECK(dim_sk(Level(11), Weight(2)) == 1);
}

TEST_CASE("alpha pair") {
  CHECK(alpha_pair(Level(7), 24) == AlphaPair{0, 0});
  CHECK(alpha_pair(Level(1), 286) == AlphaPair{1, 1});
  CHECK(alpha_pair(Level(4), 14) == AlphaPair{0, 0});
  CHECK(alpha_pair(Level(1), 56) == AlphaPair{0, 2});
  CHECK_THROWS_AS(alpha_pair(Level(1), 15), std::invalid_argument);
  for (int64_t n = 1; n <= 50; ++n)
    for (int64_t big_k = 2; big_k <= 60; big_k += 2) {
      AlphaPair a = alpha_pair(Level(n), big_k);
      CHECK((a.alpha2 == 0 || a.alpha2 == eps2(Level(n))));
      CHECK((a.alpha3 == 0 || a.alpha3 == eps3(Level(n)) || a.alpha3 == 2 * eps3(Level(n))));
    }
}

TEST_CASE("ord bound and main inequality") {
  CHECK(amr_ord_bound(Level(1), Weight(16), 19) == 23);
  CHECK(amr_ord_bound(Level(1), Weight(12), 5) == 4);
  CHECK(main_inequality_lhs(Level(1), Weight(16), 19) == 2);
  CHECK_THROWS_AS(amr_ord_bound(Level(19), Weight(16), 19), std::invalid_argument);
  CHECK_THROWS_AS(amr_ord_bound(Level(1), Weight(16), 21), std::invalid_argument);
  CHECK_THROWS_AS(check_triple(Level(1), Weight(12), 5), std::invalid_argument);
  CHECK(amr_ord_bound(Level(1), Weight(16), 19) <= dim_sk(Level(19), Weight(16)));
}

TEST_CASE("reduction identity on random triples") {
  std::mt19937_64 rng(20260101);
  int tested = 0;
  while (tested < 1000) {
    const int64_t k = 4 + 2 * static_cast<int64_t>(rng() % 15);
    const int64_t n = 1 + static_cast<int64_t>(rng() % 500);
    const int64_t p = static_cast<int64_t>(rng() % 400);
    if (!is_prime(p) || n % p == 0 || p < std::max<int64_t>(5, k + 1)) continue;
    ++tested;
    const mpq_class lhs = main_inequality_lhs(Level(n), Weight(k), p);
    const mpq_class amr = amr_ord_bound(Level(n), Weight(k), p);
    CHECK(mpq_class(dim_sk(Level(p * n), Weight(k))) - amr == lhs - 1);
    CHECK(lhs >= 1);
  }
}

TEST_CASE("case classification") {
  CaseReport r = classify_case(Level(1), Weight(16), 19);
  CHECK(r.big_k == 286);
  CHECK(r.big_k_class12 == 10);
  CHECK_FALSE(r.alpha2_zero);
  CHECK_FALSE(r.alpha3_zero);
  CHECK(r.certified);

  CaseReport s = classify_case(Level(5), Weight(4), 7);
  CHECK(s.big_k == 22);
  CHECK(s.big_k_class12 == 10);
  CHECK(s.alpha.alpha2 == eps2(Level(5)));
  CHECK(s.alpha.alpha3 == 0);
  CHECK(s.certified);
}

TEST_CASE("scan is deterministic across thread counts") {
  ScanRange small{4, 10, 40, 60};
  auto a = scan(small, 1);
  auto b = scan(small, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].report.level == b[i].report.level);
    CHECK(a[i].report.weight == b[i].report.weight);
    CHECK(a[i].report.prime == b[i].report.prime);
    CHECK(a[i].report.lhs == b[i].report.lhs);
    CHECK(a[i].ok());
  }
}

TEST_CASE("vanishing levels") {
  CHECK(vanishing_levels(Weight(4)) == std::vector<int64_t>{1, 2, 3, 4});
  CHECK(vanishing_levels(Weight(6)) == std::vector<int64_t>{1, 2});
  CHECK(vanishing_levels(Weight(8)) == std::vector<int64_t>{1});
  CHECK(vanishing_levels(Weight(10)) == std::vector<int64_t>{1});
  CHECK(vanishing_levels(Weight(14)) == std::vector<int64_t>{1});
  CHECK(vanishing_levels(Weight(12)).empty());
}
