#include "mfgap/cuspspace.h"

#include <random>
#include <stdexcept>

#include "mfgap/arith.h"
#include "mfgap/invariants.h"

namespace mfgap {

QExpansion SpaceBasis::row_expansion(size_t i) const {
  std::vector<mpq_class> c(rows[i].begin(), rows[i].end());
  return QExpansion(std::move(c), weight, level);
}

std::optional<QVector> SpaceBasis::coordinates(const QExpansion& f) const {
  const int64_t b = std::min(precision, f.precision());
  QVector coords(dim());
  std::vector<mpq_class> rest(f.coefficients().begin(), f.coefficients().begin() + b);
  for (size_t r = 0; r < dim(); ++r) {
    if (pivots[r] > b) return std::nullopt;
    coords[r] = rest[pivots[r] - 1] / mpq_class(rows[r][pivots[r] - 1]);
  }
  for (size_t r = 0; r < dim(); ++r) {
    if (sgn(coords[r]) == 0) continue;
    for (int64_t n = 0; n < b; ++n)
      if (sgn(rows[r][n]) != 0) rest[n] -= coords[r] * rows[r][n];
  }
  for (const auto& x : rest)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

QExpansion SpaceBasis::combination(const QVector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("combination: size mismatch");
  QExpansion f(precision, weight, level);
  for (size_t r = 0; r < dim(); ++r) {
    if (sgn(coords[r]) == 0) continue;
    for (int64_t n = 1; n <= precision; ++n)
      if (sgn(rows[r][n - 1]) != 0) f[n] += coords[r] * rows[r][n - 1];
  }
  return f;
}

SpaceBasis SpaceBasis::truncated(int64_t b) const {
  if (b > precision) throw std::invalid_argument("truncated: precision exceeds available");
  SpaceBasis out = *this;
  out.precision = b;
  for (auto& r : out.rows) r.resize(static_cast<size_t>(b));
  return out;
}

SpaceBasis echelon_basis(const std::vector<QVector>& series, int64_t level, int64_t weight, int64_t precision,
                         QMatrix* transform) {
  const size_t s = series.size();
  const size_t b = static_cast<size_t>(precision);
  QMatrix aug(s, b + s);
  for (size_t i = 0; i < s; ++i) {
    if (series[i].size() < b) throw std::invalid_argument("echelon_basis: series too short");
    for (size_t n = 0; n < b; ++n) aug(i, n) = series[i][n];
    aug(i, b + i) = 1;
  }
  Rref r = rref_fraction_free(aug);
  SpaceBasis out;
  out.level = level;
  out.weight = weight;
  out.precision = precision;
  std::vector<QVector> trans_rows;
  for (size_t i = 0; i < r.pivots.size() && r.pivots[i] < b; ++i) {
    mpz_class den = 1, num = 0;
    for (size_t n = 0; n < b; ++n) {
      const mpq_class& x = r.reduced(i, n);
      if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<mpz_class> row(b);
    for (size_t n = 0; n < b; ++n) {
      const mpq_class& x = r.reduced(i, n);
      if (sgn(x) == 0) continue;
      row[n] = x.get_num() * (den / x.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), row[n].get_mpz_t());
    }
    for (auto& z : row)
      if (sgn(z) != 0) z /= num;
    mpq_class scale(den, num);
    scale.canonicalize();
    out.rows.push_back(std::move(row));
    out.pivots.push_back(static_cast<int64_t>(r.pivots[i]) + 1);
    if (transform) {
      QVector t(s);
      for (size_t j = 0; j < s; ++j) t[j] = r.reduced(i, b + j) * scale;
      trans_rows.push_back(std::move(t));
    }
  }
  if (transform) *transform = QMatrix::from_rows(trans_rows, s);
  return out;
}

namespace msengine {

int64_t default_precision(int64_t level, int64_t weight) {
  return invariants::sturm_bound(Level(level), Weight(weight)) + 10;
}

std::shared_ptr<const CuspSpace> CuspSpace::build(int64_t level, int64_t weight, int64_t precision,
                                                  const BuildOptions& opts) {
  Level n(level);
  Weight k(weight);
  const int64_t sturm = invariants::sturm_bound(n, k);
  if (precision < sturm)
    throw std::invalid_argument("precision " + std::to_string(precision) + " is below the Sturm bound " +
                                std::to_string(sturm));
  auto space = std::shared_ptr<CuspSpace>(new CuspSpace());
  space->ms_ = std::make_shared<MSPresentation>(level, weight);
  space->hecke_ = std::make_shared<CuspidalHecke>(space->ms_);
  const size_t d = space->ms_->cuspidal_dim();
  space->basis_.level = level;
  space->basis_.weight = weight;
  space->basis_.precision = precision;
  if (d == 0) return space;

  space->hecke_->precompute(precision, opts.threads);

  std::mt19937_64 rng(static_cast<uint64_t>(level) * 1000003ULL + static_cast<uint64_t>(weight));
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    QVector v(d);
    if (attempt == 0) {
      v[0] = 1;
    } else {
      for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
    }
    auto orbit = space->hecke_->orbit(v, precision);
    std::vector<QVector> series(d, QVector(static_cast<size_t>(precision)));
    for (int64_t nn = 0; nn < precision; ++nn)
      for (size_t j = 0; j < d; ++j) series[j][nn] = orbit[nn][j];
    QMatrix trans;
    SpaceBasis b = echelon_basis(series, level, weight, precision, &trans);
    if (b.dim() != d) continue;
    // The rref transform is W_P^{-1} up to the row scaling, where W_P holds
    // the pivot columns of the series matrix, so its inverse is read off.
    QMatrix inv(d, d);
    for (size_t r = 0; r < d; ++r) {
      mpq_class lead(b.rows[r][b.pivots[r] - 1]);
      for (size_t j = 0; j < d; ++j) inv(j, r) = series[j][b.pivots[r] - 1] / lead;
    }
    space->basis_ = std::move(b);
    space->generator_ = std::move(v);
    space->functionals_inv_ = std::move(inv);
    space->functionals_ = std::move(trans);
    return space;
  }
  throw std::logic_error("no generating vector found for the cuspidal Hecke module (N=" + std::to_string(level) +
                         ", k=" + std::to_string(weight) + ")");
}

QMatrix CuspSpace::on_forms(const QMatrix& symbol_op) const {
  return (functionals_ * symbol_op * functionals_inv_).transpose();
}

QMatrix CuspSpace::hecke_on_forms(int64_t n) const { return on_forms(hecke_->hecke(n)); }

SpaceBasis qexpansion_basis(int64_t level, int64_t weight, int64_t precision, const BuildOptions& opts) {
  return CuspSpace::build(level, weight, precision, opts)->basis();
}

std::vector<CertificateEntry> hecke_stability_certificate(const SpaceBasis& basis, int64_t max_m) {
  std::vector<CertificateEntry> out;
  const int64_t max_pivot = basis.pivots.empty() ? 0 : basis.pivots.back();
  for (int64_t m = 2; m <= max_m; ++m) {
    CertificateEntry e;
    e.m = m;
    e.checked_precision = basis.precision / m;
    e.meaningful = e.checked_precision >= max_pivot;
    SpaceBasis trunc = basis.truncated(e.checked_precision);
    trunc.pivots.clear();
    trunc.rows.clear();
    // Rows whose pivots survive the truncation keep their echelon shape.
    for (size_t r = 0; r < basis.dim(); ++r) {
      if (basis.pivots[r] > e.checked_precision) continue;
      auto row = basis.rows[r];
      row.resize(static_cast<size_t>(e.checked_precision));
      trunc.rows.push_back(std::move(row));
      trunc.pivots.push_back(basis.pivots[r]);
    }
    e.pass = true;
    for (size_t r = 0; r < basis.dim() && e.pass; ++r) {
      QExpansion tf(e.checked_precision, basis.weight, basis.level);
      for (int64_t n = 1; n <= e.checked_precision; ++n) {
        mpq_class a = 0;
        for (int64_t dd : divisors(gcd(n, m))) {
          if (gcd(dd, basis.level) != 1) continue;
          mpz_class dk;
          mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(dd), static_cast<unsigned long>(basis.weight - 1));
          a += mpq_class(dk * basis.rows[r][n * m / (dd * dd) - 1]);
        }
        tf[n] = a;
      }
      if (!trunc.coordinates(tf)) {
        e.pass = false;
        e.detail = "T_" + std::to_string(m) + " of row " + std::to_string(r) + " leaves the span";
      }
    }
    if (e.pass && !e.meaningful) e.detail = "precision too small for a full-rank check";
    out.push_back(std::move(e));
  }
  return out;
}

bool certificate_passes(const std::vector<CertificateEntry>& cert) {
  for (const auto& e : cert)
    if (!e.meaningful || !e.pass) return false;
  return true;
}

int64_t certificate_precision(int64_t level, int64_t weight, int64_t max_m) {
  return max_m * invariants::sturm_bound(Level(level), Weight(weight));
}

}  // namespace msengine
}  // namespace mfgap
