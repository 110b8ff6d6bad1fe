#include "mfgap/modsym.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mfgap/arith.h"
#include "mfgap/invariants.h"

namespace mfgap {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Coefficients (indexed by power of X) of (aX + bY)^e for e = 0..w.
std::vector<HomPoly> linear_powers(int64_t a, int64_t b, int w) {
  std::vector<HomPoly> pw(static_cast<size_t>(w) + 1);
  pw[0] = HomPoly{1};
  for (int e = 1; e <= w; ++e) {
    HomPoly cur(static_cast<size_t>(e) + 1);
    const HomPoly& prev = pw[e - 1];
    for (int t = 0; t < e; ++t) {
      if (sgn(prev[t]) == 0) continue;
      cur[t + 1] += a * prev[t];
      cur[t] += b * prev[t];
    }
    pw[e] = std::move(cur);
  }
  return pw;
}

HomPoly convolve(const HomPoly& x, const HomPoly& y) {
  HomPoly out(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) out[i + j] += x[i] * y[j];
  }
  return out;
}

// Partial-quotient matrices g_j with {0, r/s} = sum_j g_j {0, inf}.
std::vector<Mat2> continued_fraction_path(const Cusp& c) {
  std::vector<Mat2> out;
  out.push_back({1, 0, 0, 1});
  if (c.den == 0) return out;
  if (c.num == 0) return {};
  int64_t p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  int64_t x = c.num, y = c.den;
  int64_t sign = -1;  // (-1)^(j-1) at j = 0
  while (y != 0) {
    int64_t a = floor_div(x, y);
    int64_t r = x - a * y;
    x = y;
    y = r;
    int64_t p = a * p1 + p2, q = a * q1 + q2;
    out.push_back({p, sign * p1, q, sign * q1});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    sign = -sign;
  }
  return out;
}

}  // namespace

std::vector<HomPoly> monomial_transform(const Mat2& h, int w) {
  auto ap = linear_powers(h.a, h.b, w);
  auto cp = linear_powers(h.c, h.d, w);
  std::vector<HomPoly> rows(static_cast<size_t>(w) + 1);
  for (int i = 0; i <= w; ++i) rows[i] = convolve(ap[i], cp[w - i]);
  return rows;
}

HomPoly transform(const HomPoly& p, const Mat2& h) {
  int w = static_cast<int>(p.size()) - 1;
  auto rows = monomial_transform(h, w);
  HomPoly out(p.size());
  for (int i = 0; i <= w; ++i) {
    if (sgn(p[i]) == 0) continue;
    for (int t = 0; t <= w; ++t) out[t] += p[i] * rows[i][t];
  }
  return out;
}

namespace {

QVector transform_q(const QVector& p, const std::vector<HomPoly>& rows) {
  QVector out(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    for (size_t t = 0; t < p.size(); ++t)
      if (sgn(rows[i][t]) != 0) out[t] += p[i] * mpq_class(rows[i][t]);
  }
  return out;
}

}  // namespace

std::vector<Mat2> heilbronn_merel(int64_t n) {
  if (n < 1) throw std::invalid_argument("heilbronn_merel: n must be positive");
  std::vector<Mat2> out;
  for (int64_t a = 1; a <= n; ++a) {
    for (int64_t d = 1; a + d <= n + 1; ++d) {
      int64_t bc = a * d - n;
      if (bc < 0) continue;
      if (bc == 0) {
        for (int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (int64_t b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (int64_t b = 1; b < a && b <= bc; ++b) {
        if (bc % b != 0) continue;
        int64_t c = bc / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

Cusp Cusp::make(int64_t r, int64_t s) {
  if (s == 0) {
    if (r == 0) throw std::invalid_argument("Cusp: 0/0");
    return {1, 0};
  }
  int64_t g = gcd(r, s);
  r /= g;
  s /= g;
  if (s < 0) {
    r = -r;
    s = -s;
  }
  return {r, s};
}

Cusp Cusp::moved(const Mat2& g) const { return make(g.a * num + g.b * den, g.c * num + g.d * den); }

PathTerm act_matrix(const PathTerm& x, const Mat2& delta) {
  if (delta.det() <= 0) throw std::invalid_argument("act_matrix: determinant must be positive");
  int w = static_cast<int>(x.poly.size()) - 1;
  PathTerm out;
  out.poly = transform_q(x.poly, monomial_transform(delta.adjugate(), w));
  out.alpha = x.alpha.moved(delta);
  out.beta = x.beta.moved(delta);
  return out;
}

MSPresentation::MSPresentation(int64_t level, int64_t weight)
    : level_(level), weight_(weight), p1_(level) {
  Weight k(weight);
  Level n(level);
  build_relations();
  build_boundary();
  const int64_t expected = invariants::dim_sk(n, k);
  QMatrix ker = kernel(boundary_);
  if (static_cast<int64_t>(ker.cols()) != expected)
    throw std::logic_error("cuspidal plus-subspace has dimension " + std::to_string(ker.cols()) +
                           " but dim S_k = " + std::to_string(expected) + " (N=" + std::to_string(level) +
                           ", k=" + std::to_string(weight) + ")");
  if (ker.cols() > 0) {
    Rref r = rref(ker.transpose());
    cusp_basis_ = r.reduced.transpose();
    cusp_pivots_ = r.pivots;
  } else {
    cusp_basis_ = QMatrix(dim(), 0);
  }
}

void MSPresentation::build_relations() {
  const int w = static_cast<int>(weight_ - 2);
  const size_t nsym = symbol_count();
  constexpr size_t kNone = static_cast<size_t>(-1);

  // 2-term relations: x + x sigma = 0 and x = x^* (star involution).
  std::vector<size_t> comp_rep(nsym, kNone);
  std::vector<int> comp_coef(nsym, 0);
  std::vector<bool> comp_zero;  // indexed by component number
  std::vector<size_t> comp_id(nsym, kNone);
  std::vector<size_t> reps;
  for (size_t s0 = 0; s0 < nsym; ++s0) {
    if (comp_rep[s0] != kNone) continue;
    size_t cid = reps.size();
    reps.push_back(s0);
    comp_zero.push_back(false);
    std::vector<size_t> stack{s0};
    comp_rep[s0] = s0;
    comp_coef[s0] = 1;
    comp_id[s0] = cid;
    while (!stack.empty()) {
      size_t s = stack.back();
      stack.pop_back();
      ManinSymbol ms = symbol(s);
      auto [c, d] = p1_.rep(ms.p1_index);
      int parity = (ms.degree % 2 == 0) ? 1 : -1;
      std::pair<size_t, int> edges[2] = {
          {symbol_id(w - ms.degree, p1_.normalize(d, -c)), -parity},
          {symbol_id(ms.degree, p1_.normalize(-c, d)), parity},
      };
      for (auto [t, eps] : edges) {
        int want = eps * comp_coef[s];
        if (comp_rep[t] == kNone) {
          comp_rep[t] = s0;
          comp_coef[t] = want;
          comp_id[t] = cid;
          stack.push_back(t);
        } else if (comp_coef[t] != want) {
          comp_zero[cid] = true;
        }
      }
    }
  }

  std::vector<size_t> free_of_comp(reps.size(), kNone);
  std::vector<size_t> free_reps;
  for (size_t c = 0; c < reps.size(); ++c) {
    if (comp_zero[c]) continue;
    free_of_comp[c] = free_reps.size();
    free_reps.push_back(reps[c]);
  }
  free_count_ = free_reps.size();
  const size_t nf = free_count_;

  // 3-term relations x + x tau + x tau^2 = 0, reduced incrementally.
  const Mat2 tau_mats[3] = {{1, 0, 0, 1}, {0, -1, 1, -1}, {-1, 1, -1, 0}};
  std::vector<std::vector<HomPoly>> tau_rows;
  for (const auto& h : tau_mats) tau_rows.push_back(monomial_transform(h, w));

  std::vector<QVector> prow;
  std::vector<size_t> pcol;
  std::vector<long> pivot_row_of_col(nf, -1);
  QVector rel(nf);
  mpq_class tmp;
  for (size_t s = 0; s < nsym; ++s) {
    ManinSymbol ms = symbol(s);
    auto [c, d] = p1_.rep(ms.p1_index);
    std::fill(rel.begin(), rel.end(), 0);
    bool any = false;
    for (int h = 0; h < 3; ++h) {
      const Mat2& m = tau_mats[h];
      size_t idx = p1_.normalize(c * m.a + d * m.c, c * m.b + d * m.d);
      const HomPoly& row = tau_rows[h][ms.degree];
      for (int t = 0; t <= w; ++t) {
        if (sgn(row[t]) == 0) continue;
        size_t sym = symbol_id(t, idx);
        size_t cid = comp_id[sym];
        if (comp_zero[cid]) continue;
        size_t f = free_of_comp[cid];
        rel[f] += comp_coef[sym] * row[t];
        any = true;
      }
    }
    if (!any) continue;
    for (size_t r = 0; r < prow.size(); ++r) {
      const mpq_class& x = rel[pcol[r]];
      if (sgn(x) == 0) continue;
      mpq_class f = x;
      const QVector& pr = prow[r];
      for (size_t j = 0; j < nf; ++j) {
        if (sgn(pr[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), pr[j].get_mpq_t());
        rel[j] -= tmp;
      }
    }
    size_t col = 0;
    while (col < nf && sgn(rel[col]) == 0) ++col;
    if (col == nf) continue;
    mpq_class inv = 1 / rel[col];
    for (auto& x : rel)
      if (sgn(x) != 0) x *= inv;
    for (auto& pr : prow) {
      if (sgn(pr[col]) == 0) continue;
      mpq_class f = pr[col];
      for (size_t j = 0; j < nf; ++j) {
        if (sgn(rel[j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rel[j].get_mpq_t());
        pr[j] -= tmp;
      }
    }
    pivot_row_of_col[col] = static_cast<long>(prow.size());
    prow.push_back(rel);
    pcol.push_back(col);
  }

  std::vector<long> basis_of_free(nf, -1);
  for (size_t f = 0; f < nf; ++f) {
    if (pivot_row_of_col[f] != -1) continue;
    basis_of_free[f] = static_cast<long>(basis_symbols_.size());
    basis_symbols_.push_back(free_reps[f]);
  }

  symbol_to_quotient_.assign(nsym, {});
  for (size_t s = 0; s < nsym; ++s) {
    size_t cid = comp_id[s];
    if (comp_zero[cid]) continue;
    size_t f = free_of_comp[cid];
    int coef = comp_coef[s];
    auto& out = symbol_to_quotient_[s];
    if (basis_of_free[f] >= 0) {
      out.emplace_back(static_cast<uint32_t>(basis_of_free[f]), mpq_class(coef));
    } else {
      const QVector& pr = prow[pivot_row_of_col[f]];
      for (size_t j = 0; j < nf; ++j) {
        if (j == f || sgn(pr[j]) == 0) continue;
        out.emplace_back(static_cast<uint32_t>(basis_of_free[j]), -coef * pr[j]);
      }
    }
  }
}

void MSPresentation::build_boundary() {
  const size_t np1 = p1_.size();
  std::vector<size_t> parent(np1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](size_t x, size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (size_t i = 0; i < np1; ++i) {
    auto [c, d] = p1_.rep(i);
    unite(i, p1_.normalize(c, c + d));   // g T has the same cusp g(inf)
    unite(i, p1_.normalize(-c, d));      // star involution: alpha -> -alpha
  }
  std::vector<long> class_of_root(np1, -1);
  size_t nclasses = 0;
  cusp_class_.assign(np1, 0);
  for (size_t i = 0; i < np1; ++i) {
    size_t r = find(i);
    if (class_of_root[r] < 0) class_of_root[r] = static_cast<long>(nclasses++);
    cusp_class_[i] = static_cast<size_t>(class_of_root[r]);
  }

  const int w = static_cast<int>(weight_ - 2);
  boundary_ = QMatrix(nclasses, dim());
  for (size_t j = 0; j < dim(); ++j) {
    ManinSymbol ms = symbol(basis_symbols_[j]);
    auto [c, d] = p1_.rep(ms.p1_index);
    if (ms.degree == w) boundary_(cusp_class_[ms.p1_index], j) += 1;
    if (ms.degree == 0) boundary_(cusp_class_[p1_.normalize(d, -c)], j) -= 1;
  }
}

QVector MSPresentation::reduce_symbol_dense(size_t id) const {
  QVector v(dim());
  for (const auto& [j, c] : symbol_to_quotient_[id]) v[j] += c;
  return v;
}

QVector MSPresentation::cuspidal_coordinates(const QVector& v) const {
  const size_t d = cuspidal_dim();
  QVector coords(d);
  for (size_t r = 0; r < d; ++r) coords[r] = v[cusp_pivots_[r]];
  if (cusp_basis_ * coords != v) throw std::logic_error("vector is not in the cuspidal subspace");
  return coords;
}

QMatrix MSPresentation::restrict_to_cuspidal(const QMatrix& op) const {
  const size_t d = cuspidal_dim();
  QMatrix image = op * cusp_basis_;
  QMatrix out(d, d);
  for (size_t r = 0; r < d; ++r) {
    QVector coords = cuspidal_coordinates(image.column(r));
    for (size_t i = 0; i < d; ++i) out(i, r) = coords[i];
  }
  return out;
}

PathTerm MSPresentation::manin_to_path(const ManinSymbol& s) const {
  const int w = static_cast<int>(weight_ - 2);
  Mat2 g = p1_.lift_to_sl2(s.p1_index);
  QVector mono(static_cast<size_t>(w) + 1);
  mono[s.degree] = 1;
  PathTerm t;
  t.poly = transform_q(mono, monomial_transform(g.adjugate(), w));
  t.alpha = Cusp::make(g.b, g.d);
  t.beta = Cusp::make(g.a, g.c);
  return t;
}

QVector MSPresentation::reduce_path(const PathTerm& t) const {
  const int w = static_cast<int>(weight_ - 2);
  QVector out(dim());
  auto add_from_zero = [&](const Cusp& c, int sign) {
    for (const Mat2& g : continued_fraction_path(c)) {
      QVector q = transform_q(t.poly, monomial_transform(g, w));
      size_t idx = p1_.normalize(g.c, g.d);
      for (int e = 0; e <= w; ++e) {
        if (sgn(q[e]) == 0) continue;
        for (const auto& [j, coef] : symbol_to_quotient_[symbol_id(e, idx)]) {
          if (sign > 0) out[j] += q[e] * coef;
          else out[j] -= q[e] * coef;
        }
      }
    }
  };
  add_from_zero(t.beta, 1);
  add_from_zero(t.alpha, -1);
  return out;
}

QMatrix MSPresentation::hecke_cosets(int64_t n) const {
  if (n < 1) throw std::invalid_argument("hecke_cosets: n must be positive");
  std::vector<Mat2> reps;
  for (int64_t a : divisors(n)) {
    if (gcd(a, level_) != 1) continue;
    int64_t d = n / a;
    for (int64_t b = 0; b < d; ++b) reps.push_back({a, b, 0, d});
  }
  QMatrix out(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    PathTerm x = manin_to_path(symbol(basis_symbols_[j]));
    QVector col(dim());
    for (const Mat2& h : reps) {
      QVector v = reduce_path(act_matrix(x, h));
      for (size_t i = 0; i < dim(); ++i) col[i] += v[i];
    }
    for (size_t i = 0; i < dim(); ++i) out(i, j) = col[i];
  }
  return out;
}

namespace {

// rows[i][t] = coefficient of X^t Y^(w-t) in (aX+bY)^i (cX+dY)^(w-i), built
// by R_{i+1} = R_i (aX+bY) / (cX+dY) with exact synthetic division (d >= 1).
void heilbronn_rows(const Mat2& h, int w, std::vector<HomPoly>& rows, HomPoly& prod) {
  rows.resize(static_cast<size_t>(w) + 1);
  for (auto& r : rows) r.resize(static_cast<size_t>(w) + 1);
  prod.resize(static_cast<size_t>(w) + 2);
  HomPoly& r0 = rows[0];
  // (cX+dY)^w by repeated multiplication in place.
  for (auto& z : r0) z = 0;
  r0[0] = 1;
  for (int e = 1; e <= w; ++e) {
    for (int t = e; t >= 1; --t) {
      mpz_mul_si(r0[t].get_mpz_t(), r0[t].get_mpz_t(), h.d);
      mpz_addmul_ui(r0[t].get_mpz_t(), r0[t - 1].get_mpz_t(), static_cast<unsigned long>(h.c));
    }
    mpz_mul_si(r0[0].get_mpz_t(), r0[0].get_mpz_t(), h.d);
  }
  for (int i = 0; i < w; ++i) {
    const HomPoly& cur = rows[i];
    HomPoly& next = rows[i + 1];
    for (int t = 0; t <= w + 1; ++t) {
      mpz_set_ui(prod[t].get_mpz_t(), 0);
      if (t <= w) mpz_mul_si(prod[t].get_mpz_t(), cur[t].get_mpz_t(), h.b);
      if (t >= 1) mpz_addmul_ui(prod[t].get_mpz_t(), cur[t - 1].get_mpz_t(), static_cast<unsigned long>(h.a));
    }
    for (int t = 0; t <= w; ++t) {
      if (t >= 1) mpz_submul_ui(prod[t].get_mpz_t(), next[t - 1].get_mpz_t(), static_cast<unsigned long>(h.c));
      mpz_divexact_ui(next[t].get_mpz_t(), prod[t].get_mpz_t(), static_cast<unsigned long>(h.d));
    }
  }
}

}  // namespace

QMatrix MSPresentation::hecke_heilbronn(int64_t p) const {
  if (!is_prime(p)) throw std::invalid_argument("hecke_heilbronn: p must be prime");
  const int w = static_cast<int>(weight_ - 2);
  const size_t m = dim();
  const size_t nsym = symbol_count();
  std::vector<ManinSymbol> gens(m);
  std::vector<std::array<int64_t, 2>> gen_rep(m);
  for (size_t j = 0; j < m; ++j) {
    gens[j] = symbol(basis_symbols_[j]);
    gen_rep[j] = p1_.rep(gens[j].p1_index);
  }

  std::vector<std::vector<mpz_class>> acc(m, std::vector<mpz_class>(nsym));
  std::vector<HomPoly> rows;
  HomPoly prod;
  for (const Mat2& h : heilbronn_merel(p)) {
    heilbronn_rows(h, w, rows, prod);
    for (size_t j = 0; j < m; ++j) {
      auto [u, v] = gen_rep[j];
      int64_t idx = p1_.index_or_invalid(u * h.a + v * h.c, u * h.b + v * h.d);
      if (idx < 0) continue;
      const HomPoly& row = rows[gens[j].degree];
      auto& a = acc[j];
      for (int t = 0; t <= w; ++t)
        if (sgn(row[t]) != 0) mpz_add(a[symbol_id(t, static_cast<size_t>(idx))].get_mpz_t(),
                                      a[symbol_id(t, static_cast<size_t>(idx))].get_mpz_t(), row[t].get_mpz_t());
    }
  }

  // Symbols are grouped by the common denominator of their quotient image so
  // that the accumulation runs over integers.
  std::map<mpz_class, std::vector<size_t>> by_den;
  std::vector<std::vector<std::pair<uint32_t, mpz_class>>> num(nsym);
  for (size_t s = 0; s < nsym; ++s) {
    mpz_class den = 1;
    for (const auto& [i, coef] : symbol_to_quotient_[s])
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coef.get_den_mpz_t());
    for (const auto& [i, coef] : symbol_to_quotient_[s])
      num[s].emplace_back(i, coef.get_num() * (den / coef.get_den()));
    if (!num[s].empty()) by_den[den].push_back(s);
  }
  QMatrix out(m, m);
  std::vector<mpz_class> col(m);
  for (size_t j = 0; j < m; ++j) {
    for (const auto& [den, syms] : by_den) {
      for (auto& z : col) z = 0;
      for (size_t s : syms) {
        const mpz_class& z = acc[j][s];
        if (sgn(z) == 0) continue;
        for (const auto& [i, c] : num[s]) mpz_addmul(col[i].get_mpz_t(), z.get_mpz_t(), c.get_mpz_t());
      }
      for (size_t i = 0; i < m; ++i) {
        if (sgn(col[i]) == 0) continue;
        mpq_class x(col[i], den);
        x.canonicalize();
        out(i, j) += x;
      }
    }
  }
  return out;
}

QMatrix CuspidalHecke::prime(int64_t p) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = primes_.find(p);
    if (it != primes_.end()) return it->second;
  }
  QMatrix t = ms_->restrict_to_cuspidal(ms_->hecke_heilbronn(p));
  std::lock_guard<std::mutex> lock(mu_);
  return primes_.emplace(p, std::move(t)).first->second;
}

QMatrix CuspidalHecke::hecke(int64_t n) const {
  if (n < 1) throw std::invalid_argument("hecke: n must be positive");
  if (n == 1) return QMatrix::identity(dim());
  int64_t p = factor(n).front().first;
  QMatrix t = prime(p) * hecke(n / p);
  if (ms_->level() % p != 0 && (n / p) % p == 0) {
    mpq_class s(mpz_class(1));
    for (int64_t i = 0; i < ms_->weight() - 1; ++i) s *= p;
    t = t - hecke(n / (p * p)).scaled(s);
  }
  return t;
}

void CuspidalHecke::precompute(int64_t bound, unsigned threads) const {
  std::vector<int64_t> todo;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (int64_t p : primes_up_to(bound))
      if (!primes_.count(p)) todo.push_back(p);
  }
  threads = std::max(1u, threads);
  if (threads == 1 || todo.size() < 2) {
    for (int64_t p : todo) prime(p);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < todo.size(); i = next++) prime(todo[i]);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<QVector> CuspidalHecke::orbit(const QVector& v, int64_t count) const {
  std::vector<QVector> w;
  if (count < 1) return w;
  precompute(count, 1);
  std::vector<int64_t> spf(static_cast<size_t>(count) + 1, 0);
  for (int64_t i = 2; i <= count; ++i)
    if (spf[i] == 0)
      for (int64_t j = i; j <= count; j += i)
        if (spf[j] == 0) spf[j] = i;
  const int64_t n_level = ms_->level();
  w.reserve(static_cast<size_t>(count));
  w.push_back(v);
  std::map<int64_t, mpz_class> pk1;
  for (int64_t n = 2; n <= count; ++n) {
    int64_t p = spf[n];
    const QMatrix* tp = nullptr;
    {
      std::lock_guard<std::mutex> lock(mu_);
      tp = &primes_.at(p);
    }
    QVector next = *tp * w[n / p - 1];
    if (n_level % p != 0 && (n / p) % p == 0) {
      auto it = pk1.find(p);
      if (it == pk1.end()) {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(ms_->weight() - 1));
        it = pk1.emplace(p, s).first;
      }
      mpq_class s(it->second);
      const QVector& prev = w[n / (p * p) - 1];
      for (size_t i = 0; i < next.size(); ++i) next[i] -= s * prev[i];
    }
    w.push_back(std::move(next));
  }
  return w;
}

}  // namespace mfgap
