#include "doctest.h"
#include "mfgap/gaps.h"
#include "mfgap/invariants.h"

using namespace mfgap;
using namespace mfgap::gaps;

namespace {

bool check_passed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("gap data at level 19 weight 16") {
  GapData g = gap_data(19, 16);
  CHECK(g.dim == 24);
  CHECK(std::find(g.pivots.begin(), g.pivots.end(), 25) != g.pivots.end());
  CHECK(g.wdim == 1);
  CHECK(g.certificate_ok);
  GapData h = gap_data(19, 16, 300);
  CHECK(h.pivots == g.pivots);
  CHECK(h.wdim == g.wdim);
}

TEST_CASE("ord bound on S") {
  Report r = verify_theorem(1, 12, 5);
  CHECK(r.pass());
  CHECK(r.dims["S"] == 4);
  CHECK(check_passed(r, "S ∩ W_k(pN) = {0}"));
  CHECK(check_passed(r, "W_p^2 = 1"));
  CHECK(check_passed(r, "Tr(g) = (p+1) g for level-N g"));
  CHECK_FALSE(r.triple["in_theorem_range"].get<bool>());

  Report s = verify_theorem(1, 16, 19);
  CHECK(s.pass());
  CHECK(s.bounds["max_ord_over_S"].get<int64_t>() <= 23);
  CHECK(s.bounds["amr_ord_bound"] == "23");

  Report t = verify_theorem(2, 4, 7);
  CHECK(t.pass());
  CHECK_THROWS_AS(verify_theorem(7, 4, 7), std::invalid_argument);
}

TEST_CASE("dimension bound for W") {
  Report r = verify_cor_subspace(1, 16, 19);
  CHECK(r.pass());
  CHECK(r.wdim["W_k(pN)"] == 1);
  CHECK(r.bounds["sharp"] == true);
  Report s = verify_cor_subspace(1, 12, 13);
  CHECK(s.pass());
}

TEST_CASE("vanishing lower space") {
  CHECK(verify_cor_analogue(2, 6, 7).pass());
  Report r = verify_cor_analogue(4, 4, 5);
  CHECK(r.pass());
  CHECK(r.wdim["W_k(pN)"] == 0);
  CHECK(verify_cor_analogue(1, 14, 17).pass());
  CHECK_THROWS_AS(verify_cor_analogue(1, 12, 13), std::invalid_argument);
}

TEST_CASE("weight two at genus zero levels") {
  CHECK(verify_ogg(2, 11).pass());
  CHECK(verify_ogg(1, 37).pass());
  CHECK(verify_ogg(1, 11).pass());
  CHECK_THROWS_AS(verify_ogg(11, 2), std::invalid_argument);
}

TEST_CASE("report schema") {
  auto j = verify_cor_analogue(2, 6, 7).to_json();
  for (const char* key : {"triple", "dims", "pivots", "wdim", "bounds", "checks"}) CHECK(j.contains(key));
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("witness"));
  }
}
