#include "brute.h"
#include "doctest.h"
#include "mfgap/arith.h"
#include "mfgap/cuspspace.h"
#include "mfgap/invariants.h"
#include "mfgap/modsym.h"
#include "mfgap/oracles.h"

using namespace mfgap;

namespace {

std::shared_ptr<const MSPresentation> presentation(int64_t n, int64_t k) {
  return std::make_shared<MSPresentation>(n, k);
}

}  // namespace

TEST_CASE("projective line") {
  CHECK(P1List(1).size() == 1);
  CHECK(P1List(46).size() == 72);
  CHECK(static_cast<int64_t>(P1List(46).size()) == brute::p1_count(46));
  P1List p5(5);
  CHECK(p5.normalize(2, 3) == p5.normalize(4, 6));
  CHECK(p5.normalize(2, 3) == p5.normalize(-2, -3));
  P1List p12(12);
  CHECK_THROWS_AS(p12.normalize(2, 4), std::invalid_argument);
  CHECK(p12.index_or_invalid(2, 4) == -1);
  for (size_t i = 0; i < p12.size(); ++i) {
    Mat2 g = p12.lift_to_sl2(i);
    CHECK(g.det() == 1);
    CHECK(p12.normalize(g.c, g.d) == i);
  }
}

TEST_CASE("cuspidal dimension matches the formula") {
  CHECK(MSPresentation(1, 12).cuspidal_dim() == 1);
  CHECK(MSPresentation(19, 16).cuspidal_dim() == 24);
  CHECK(MSPresentation(11, 2).cuspidal_dim() == 1);
  for (int64_t n = 1; n <= 30; ++n)
    for (int64_t k : {2, 4, 6, 8, 12}) {
      MSPresentation ms(n, k);
      CHECK(static_cast<int64_t>(ms.cuspidal_dim()) == invariants::dim_sk(Level(n), Weight(k)));
    }
}

TEST_CASE("matrix action on symbols") {
  auto ms = presentation(11, 4);
  const Mat2 d1{2, 1, 1, 3}, d2{1, 2, 0, 3};
  for (size_t id = 0; id < ms->symbol_count(); id += 7) {
    PathTerm x = ms->manin_to_path(ms->symbol(id));
    CHECK(ms->reduce_path(act_matrix(x, Mat2{})) == ms->reduce_path(x));
    CHECK(ms->reduce_path(x) == ms->reduce_symbol_dense(id));
    CHECK(ms->reduce_path(act_matrix(act_matrix(x, d1), d2)) == ms->reduce_path(act_matrix(x, d2 * d1)));
  }
}

TEST_CASE("Hecke operators at level one weight twelve are tau") {
  auto ms = presentation(1, 12);
  CuspidalHecke h(ms);
  auto tau = oracles::tau_table(50);
  for (int64_t n = 1; n <= 50; ++n) {
    QMatrix t = h.hecke(n);
    REQUIRE(t.rows() == 1);
    CHECK(t(0, 0) == mpq_class(tau[n - 1]));
  }
  CHECK(h.prime(2)(0, 0) == -24);
}

TEST_CASE("Heilbronn and coset Hecke operators agree") {
  for (auto [n, k] : std::vector<std::pair<int64_t, int64_t>>{{1, 12}, {11, 2}, {19, 4}, {6, 6}, {10, 4}}) {
    auto ms = presentation(n, k);
    for (int64_t p : {2, 3, 5, 7}) CHECK(ms->hecke_heilbronn(p) == ms->hecke_cosets(p));
  }
}

TEST_CASE("Hecke multiplicativity on level 19 weight 16") {
  CuspidalHecke h(presentation(19, 16));
  CHECK(h.hecke(2) * h.hecke(3) == h.hecke(6));
  CHECK(h.hecke(2) * h.hecke(5) == h.hecke(10));
  CHECK(h.hecke(2) * h.hecke(3) == h.hecke(3) * h.hecke(2));
  QMatrix t2 = h.hecke(2);
  mpq_class p15 = 32768;
  CHECK(h.hecke(4) == t2 * t2 - QMatrix::identity(t2.rows()).scaled(p15));
}

TEST_CASE("q-expansion bases against oracles") {
  SpaceBasis d = msengine::qexpansion_basis(1, 12, 30);
  auto delta = oracles::delta(30);
  REQUIRE(d.dim() == 1);
  for (int64_t n = 1; n <= 30; ++n) CHECK(d.rows[0][n - 1] == delta[n]);

  CHECK(msengine::qexpansion_basis(4, 4, 20).dim() == 0);

  SpaceBasis e = msengine::qexpansion_basis(11, 2, 20);
  auto eta = oracles::eta_expand({{1, 2}, {11, 2}}, 20);
  REQUIRE(e.dim() == 1);
  for (int64_t n = 1; n <= 20; ++n) CHECK(e.rows[0][n - 1] == eta[n]);

  for (int64_t k : {12, 16, 18, 20, 22}) CHECK(msengine::qexpansion_basis(1, k, 60) == oracles::victor_miller_basis(k, 60));
}

TEST_CASE("basis invariants and certificate") {
  for (auto [n, k] : std::vector<std::pair<int64_t, int64_t>>{{19, 16}, {11, 2}, {5, 12}, {20, 4}, {37, 2}, {22, 2}}) {
    const int64_t b = msengine::certificate_precision(n, k);
    SpaceBasis sb = msengine::qexpansion_basis(n, k, b);
    CHECK(static_cast<int64_t>(sb.dim()) == invariants::dim_sk(Level(n), Weight(k)));
    for (size_t i = 1; i < sb.pivots.size(); ++i) CHECK(sb.pivots[i - 1] < sb.pivots[i]);
    if (!sb.pivots.empty()) CHECK(sb.pivots.back() <= invariants::valence_bound(Level(n), Weight(k)));
    for (size_t i = 0; i < sb.dim(); ++i) {
      CHECK(sgn(sb.rows[i][sb.pivots[i] - 1]) > 0);
      mpz_class content = 0;
      for (const auto& z : sb.rows[i]) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
      CHECK(content == 1);
      for (size_t j = 0; j < sb.dim(); ++j)
        if (j != i) CHECK(sgn(sb.rows[i][sb.pivots[j] - 1]) == 0);
    }
    auto cert = msengine::hecke_stability_certificate(sb);
    CHECK(msengine::certificate_passes(cert));
  }
}

TEST_CASE("certificate rejects a perturbed basis") {
  SpaceBasis sb = msengine::qexpansion_basis(11, 2, msengine::certificate_precision(11, 2));
  sb.rows[0][6] += 1;
  CHECK_FALSE(msengine::certificate_passes(msengine::hecke_stability_certificate(sb)));
}

TEST_CASE("larger precision extends rows") {
  SpaceBasis a = msengine::qexpansion_basis(19, 16, 40);
  SpaceBasis b = msengine::qexpansion_basis(19, 16, 100);
  CHECK(b.dim() == 24);
  CHECK(b.truncated(40) == a);
  CHECK_THROWS_AS(msengine::qexpansion_basis(19, 16, 10), std::invalid_argument);
}

TEST_CASE("operators on forms agree with the coefficient rule") {
  auto sp = msengine::CuspSpace::build(19, 16, 200);
  const auto& b = sp->basis();
  for (int64_t m : {2, 3, 19}) {
    QMatrix t = sp->hecke_on_forms(m);
    for (size_t r = 0; r < b.dim(); ++r) {
      QExpansion f = b.row_expansion(r);
      QExpansion tf(b.precision / m, 16, 19);
      for (int64_t n = 1; n <= tf.precision(); ++n) {
        mpq_class a = 0;
        for (int64_t d : divisors(gcd(n, m))) {
          if (gcd(d, 19) != 1) continue;
          mpz_class dk;
          mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), 15);
          a += dk * f[n * m / (d * d)];
        }
        tf[n] = a;
      }
      QExpansion expect = b.combination(t.column(r)).truncated(tf.precision());
      CHECK(tf == expect);
    }
  }
}
