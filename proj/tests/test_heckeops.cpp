#include "doctest.h"
#include "mfgap/arith.h"
#include "mfgap/heckeops.h"
#include "mfgap/invariants.h"
#include "mfgap/oracles.h"

using namespace mfgap;
using namespace mfgap::heckeops;

namespace {

const OperatorStack& stack_1_12_5() {
  static const OperatorStack st = build_operator_stack(1, 12, 5);
  return st;
}

}  // namespace

TEST_CASE("U_p and V_p on q-expansions") {
  QExpansion delta = oracles::to_qexpansion(oracles::delta(40), 12, 1);
  QExpansion u2 = apply_up(delta, 2);
  CHECK(u2[1] == -24);
  CHECK(apply_up(apply_vp(delta, 5), 5) == delta);
  QExpansion v5 = apply_vp(delta, 5);
  CHECK(v5.ord() == 5);
  SpaceBasis level5 = msengine::qexpansion_basis(5, 12, 40);
  CHECK(level5.coordinates(v5.truncated(40)).has_value());
  CHECK(level5.coordinates(delta).has_value());
}

TEST_CASE("old/new split") {
  const auto& st = stack_1_12_5();
  CHECK(st.split.dim_old() == 2);
  CHECK(st.split.dim_new() == 3);

  auto big = build_spaces(1, 16, 19);
  auto split = old_new_split(big);
  CHECK(split.dim_old() == 2);
  CHECK(split.dim_new() == 22);

  for (auto [n, k, p] : std::vector<std::array<int64_t, 3>>{{1, 12, 7}, {2, 8, 3}, {3, 6, 5}, {1, 2, 37}, {11, 2, 3}}) {
    auto s = build_spaces(n, k, p);
    auto sp = old_new_split(s);
    CHECK(static_cast<int64_t>(sp.dim_new()) ==
          invariants::dim_sk(Level(p * n), Weight(k)) - 2 * invariants::dim_sk(Level(n), Weight(k)));
  }
  CHECK_THROWS_AS(build_spaces(5, 12, 5), std::invalid_argument);
}

TEST_CASE("Atkin-Lehner involution") {
  const auto& st = stack_1_12_5();
  const QMatrix& w = st.w.matrix;
  CHECK((w * w).is_identity());
  const size_t n = w.rows();
  QMatrix id = QMatrix::identity(n);
  CHECK(((w - id) * (w + id)).is_zero());
  QVector cp = charpoly(w);
  const size_t plus = kernel(w - id).cols(), minus = kernel(w + id).cols();
  CHECK(plus + minus == n);

  // Old block in the basis (g, V_p g).
  QMatrix old = st.split.old_basis;
  QMatrix block = solve_exact(old, w * old);
  CHECK(block(0, 0) == 0);
  CHECK(block(1, 1) == 0);
  CHECK(block(0, 1) == prime_power(5, -6));
  CHECK(block(1, 0) == prime_power(5, 6));

  for (int64_t l : {2, 3, 7, 11, 13, 17, 19}) {
    QMatrix t = st.spaces.ambient->hecke_on_forms(l);
    CHECK(t * w == w * t);
  }
  QMatrix u_new = solve_exact(st.split.new_basis, st.up.matrix * st.split.new_basis);
  CHECK(u_new * u_new == QMatrix::identity(u_new.rows()).scaled(prime_power(5, 10)));
}

TEST_CASE("trace map") {
  const auto& st = stack_1_12_5();
  QExpansion delta = oracles::to_qexpansion(oracles::delta(st.spaces.ambient->precision()), 12, 1);
  QExpansion tr = trace_map(st.spaces, st.trace, delta);
  CHECK(tr == delta.scaled(6));
  CHECK((st.trace.matrix * st.split.new_basis).is_zero());
  CHECK(rank(st.trace.matrix) == 1);
}

TEST_CASE("subspace S") {
  const auto& st = stack_1_12_5();
  CHECK(st.s_basis.cols() == 4);
  auto big = build_operator_stack(1, 16, 19);
  CHECK(big.s_basis.cols() == 23);
  // f -> f|W carries ker Tr onto S.
  QMatrix ker = kernel(st.trace.matrix);
  CHECK(ker.cols() == 4);
  CHECK(intersection_dim(st.w.matrix * ker, st.s_basis) == 4);
}

TEST_CASE("valuation hypothesis on S") {
  const auto& st = stack_1_12_5();
  for (size_t j = 0; j < st.s_basis.cols(); ++j) {
    QVector x = st.s_basis.column(j);
    QExpansion f = form_of(st.spaces, x);
    QExpansion fn = normalize_p(f, 5);
    CHECK(vp_valuation(fn, 5) == 0);
    const int64_t o = *f.ord();
    QExpansion fw = form_of(st.spaces, st.w.matrix * x).scaled(fn[o] / f[o]);
    auto v = vp_valuation(fw, 5);
    CHECK((!v || *v >= 1 - 12 / 2));
  }
}

TEST_CASE("level 7 weight 4 from level 2") {
  auto st = build_operator_stack(2, 4, 7);
  CHECK(st.split.dim_old() == 0);
  CHECK(st.split.dim_new() == 4);
  CHECK((st.w.matrix * st.w.matrix).is_identity());
  CHECK(st.s_basis.cols() == 4);
}
