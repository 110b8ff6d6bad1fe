#include "mfgap/heckeops.h"

#include <stdexcept>
#include <string>

#include "mfgap/arith.h"
#include "mfgap/invariants.h"

namespace mfgap::heckeops {

mpq_class prime_power(int64_t p, int64_t e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(z);
  mpq_class q(1, z);
  q.canonicalize();
  return q;
}

Spaces build_spaces(int64_t n, int64_t k, int64_t p, int64_t precision, const msengine::BuildOptions& opts) {
  invariants::check_prime_coprime(Level(n), p);
  Weight wt(k);
  Spaces s;
  s.level = n;
  s.weight = wt.value();
  s.prime = p;
  const int64_t b = precision > 0 ? precision : msengine::default_precision(p * n, k);
  s.ambient = msengine::CuspSpace::build(p * n, k, b, opts);
  s.lower = msengine::CuspSpace::build(n, k, b, opts);
  return s;
}

QMatrix old_embedding(const Spaces& s) {
  const SpaceBasis& amb = s.ambient->basis();
  const SpaceBasis& low = s.lower->basis();
  const size_t d = low.dim();
  std::vector<QVector> cols(2 * d);
  for (size_t i = 0; i < d; ++i) {
    QExpansion g = low.row_expansion(i);
    auto c = amb.coordinates(g);
    if (!c) throw std::logic_error("level " + std::to_string(s.level) + " form " + std::to_string(i) +
                                   " is not in the level " + std::to_string(s.prime * s.level) + " span");
    auto cv = amb.coordinates(apply_vp(g, s.prime));
    if (!cv) throw std::logic_error("V_p of level " + std::to_string(s.level) + " form " + std::to_string(i) +
                                    " is not in the level " + std::to_string(s.prime * s.level) + " span");
    cols[i] = std::move(*c);
    cols[d + i] = std::move(*cv);
  }
  return QMatrix::from_columns(cols, amb.dim());
}

namespace {

// Image of chi_old(t), where chi_old is the characteristic polynomial of t
// restricted to the (t-stable) old space.
QMatrix new_part_image(const QMatrix& t, const QMatrix& old) {
  QMatrix restricted = solve_exact(old, t * old);
  return column_space(poly_eval(charpoly(restricted), t));
}

}  // namespace

OldNewSplit old_new_split(const Spaces& s) {
  OldNewSplit out;
  out.lower_dim = s.lower->dim();
  out.old_basis = old_embedding(s);
  const size_t total = s.ambient->dim();
  if (rank(out.old_basis) != 2 * out.lower_dim)
    throw std::logic_error("old space has dimension below 2 dim S_k(N)");
  const size_t want = total - 2 * out.lower_dim;
  out.new_basis = QMatrix(total, 0);
  if (want > 0) {
    const int64_t pn = s.prime * s.level;
    const int64_t bound = invariants::sturm_bound(Level(pn), Weight(s.weight));
    std::vector<int64_t> ells;
    for (int64_t l : primes_up_to(std::max<int64_t>(bound, 2)))
      if (pn % l != 0) ells.push_back(l);
    auto absorb = [&](const QMatrix& img, int64_t label) {
      QMatrix next = column_space(out.new_basis.hconcat(img));
      if (next.cols() > out.new_basis.cols()) {
        out.new_basis = std::move(next);
        out.separating_primes.push_back(label);
      }
    };
    if (out.lower_dim == 0) {
      out.new_basis = QMatrix::identity(total);
    } else {
      for (int64_t l : ells) {
        if (out.new_basis.cols() == want) break;
        absorb(new_part_image(s.ambient->hecke_on_forms(l), out.old_basis), l);
      }
      // Linear combinations separate what single primes cannot.
      for (size_t i = 0; i < ells.size() && out.new_basis.cols() < want; ++i)
        for (size_t j = i + 1; j < ells.size() && out.new_basis.cols() < want; ++j) {
          QMatrix t = s.ambient->hecke_on_forms(ells[i]) + s.ambient->hecke_on_forms(ells[j]).scaled(2);
          absorb(new_part_image(t, out.old_basis), ells[i] * 1000 + ells[j]);
        }
    }
  }
  if (out.new_basis.cols() != want)
    throw std::logic_error("p-new space has dimension " + std::to_string(out.new_basis.cols()) + ", expected " +
                           std::to_string(want));
  if (intersection_dim(out.old_basis, out.new_basis) != 0)
    throw std::logic_error("old and new spaces intersect");
  return out;
}

OperatorMatrix up_operator(const Spaces& s) {
  return {"U_" + std::to_string(s.prime), s.ambient->hecke_on_forms(s.prime)};
}

OperatorMatrix hecke_operator(const Spaces& s, int64_t n) {
  return {"T_" + std::to_string(n), s.ambient->hecke_on_forms(n)};
}

OperatorMatrix atkin_lehner(const Spaces& s, const OldNewSplit& split, const OperatorMatrix& up) {
  const size_t total = s.ambient->dim();
  const size_t d = split.lower_dim;
  const int64_t p = s.prime, k = s.weight;
  QMatrix basis = split.old_basis.hconcat(split.new_basis);
  QMatrix block(total, total);
  const mpq_class up_half = prime_power(p, k / 2), down_half = prime_power(p, -k / 2);
  for (size_t i = 0; i < d; ++i) {
    block(d + i, i) = up_half;
    block(i, d + i) = down_half;
  }
  if (split.dim_new() > 0) {
    QMatrix u_new = solve_exact(split.new_basis, up.matrix * split.new_basis);
    const mpq_class c = -prime_power(p, 1 - k / 2);
    for (size_t i = 0; i < split.dim_new(); ++i)
      for (size_t j = 0; j < split.dim_new(); ++j) block(2 * d + i, 2 * d + j) = c * u_new(i, j);
  }
  QMatrix w = basis * block * inverse(basis);
  if (!(w * w).is_identity()) throw std::logic_error("Atkin–Lehner assembly failed");
  return {"W_" + std::to_string(p), std::move(w)};
}

OperatorMatrix trace_operator(const Spaces& s, const OperatorMatrix& up, const OperatorMatrix& w) {
  QMatrix tr = QMatrix::identity(s.ambient->dim()) + (up.matrix * w.matrix).scaled(prime_power(s.prime, 1 - s.weight / 2));
  return {"Tr", std::move(tr)};
}

QExpansion trace_map(const Spaces& s, const OperatorMatrix& trace, const QExpansion& f) {
  auto x = s.ambient->basis().coordinates(f);
  if (!x) throw std::invalid_argument("trace_map: input is not in the level " + std::to_string(s.prime * s.level) +
                                      " span");
  QVector y = trace.matrix * *x;
  const size_t d = s.lower->dim();
  std::vector<size_t> first(d);
  for (size_t i = 0; i < d; ++i) first[i] = i;
  QMatrix g = old_embedding(s).select_columns(first);
  if (d == 0) {
    for (const auto& c : y)
      if (sgn(c) != 0) throw std::logic_error("trace_map: non-zero image in a zero space");
    return QExpansion(s.lower->precision(), s.weight, s.level);
  }
  auto z = solve(g, y);
  if (!z || g * *z != y) throw std::logic_error("trace_map: image is not in the level " + std::to_string(s.level) +
                                               " span");
  return s.lower->basis().combination(*z);
}

QMatrix subspace_S(const Spaces& s, const OperatorMatrix& up, const OperatorMatrix& w) {
  QMatrix k = kernel(w.matrix + up.matrix.scaled(prime_power(s.prime, 1 - s.weight / 2)));
  const size_t want = s.ambient->dim() - s.lower->dim();
  if (k.cols() != want)
    throw std::logic_error("dim S = " + std::to_string(k.cols()) + ", expected " + std::to_string(want));
  return k;
}

QExpansion form_of(const Spaces& s, const QVector& coords) { return s.ambient->basis().combination(coords); }

OperatorStack build_operator_stack(int64_t n, int64_t k, int64_t p, int64_t precision,
                                   const msengine::BuildOptions& opts) {
  OperatorStack st;
  st.spaces = build_spaces(n, k, p, precision, opts);
  st.split = old_new_split(st.spaces);
  st.up = up_operator(st.spaces);
  st.w = atkin_lehner(st.spaces, st.split, st.up);
  st.trace = trace_operator(st.spaces, st.up, st.w);
  st.s_basis = subspace_S(st.spaces, st.up, st.w);
  return st;
}

}  // namespace mfgap::heckeops
