#include "mfgap/linalg.h"

#include <sstream>
#include <stdexcept>

namespace mfgap {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, size_t nrows) {
  QMatrix m(nrows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) throw std::invalid_argument("from_columns: size mismatch");
    for (size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, size_t ncols) {
  QMatrix m(rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("from_rows: size mismatch");
    for (size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(size_t i) const {
  return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

QVector QMatrix::column(size_t j) const {
  QVector v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::select_columns(const std::vector<size_t>& idx) const {
  QMatrix m(rows_, idx.size());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

QMatrix QMatrix::select_rows(const std::vector<size_t>& idx) const {
  QMatrix m(idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

QMatrix QMatrix::hconcat(const QMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
  QMatrix m(rows_, cols_ + other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  // Rows of *this and columns of o are scaled to integers, multiplied over Z,
  // and the common denominators divided out once per entry.
  std::vector<mpz_class> row_den(rows_, 1), col_den(o.cols_, 1);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l)
      if (sgn((*this)(i, l)) != 0)
        mpz_lcm(row_den[i].get_mpz_t(), row_den[i].get_mpz_t(), (*this)(i, l).get_den_mpz_t());
  for (size_t l = 0; l < o.rows_; ++l)
    for (size_t j = 0; j < o.cols_; ++j)
      if (sgn(o(l, j)) != 0) mpz_lcm(col_den[j].get_mpz_t(), col_den[j].get_mpz_t(), o(l, j).get_den_mpz_t());
  std::vector<mpz_class> a(rows_ * cols_), b(o.rows_ * o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      const mpq_class& x = (*this)(i, l);
      if (sgn(x) == 0) continue;
      mpz_divexact(a[i * cols_ + l].get_mpz_t(), row_den[i].get_mpz_t(), x.get_den_mpz_t());
      a[i * cols_ + l] *= x.get_num();
    }
  for (size_t l = 0; l < o.rows_; ++l)
    for (size_t j = 0; j < o.cols_; ++j) {
      const mpq_class& x = o(l, j);
      if (sgn(x) == 0) continue;
      mpz_divexact(b[l * o.cols_ + j].get_mpz_t(), col_den[j].get_mpz_t(), x.get_den_mpz_t());
      b[l * o.cols_ + j] *= x.get_num();
    }
  QMatrix m(rows_, o.cols_);
  std::vector<mpz_class> acc(o.cols_);
  mpz_class den;
  for (size_t i = 0; i < rows_; ++i) {
    for (auto& z : acc) z = 0;
    for (size_t l = 0; l < cols_; ++l) {
      const mpz_class& x = a[i * cols_ + l];
      if (sgn(x) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const mpz_class& y = b[l * o.cols_ + j];
        if (sgn(y) != 0) mpz_addmul(acc[j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
    for (size_t j = 0; j < o.cols_; ++j) {
      if (sgn(acc[j]) == 0) continue;
      mpq_class& e = m(i, j);
      mpz_swap(mpq_numref(e.get_mpq_t()), acc[j].get_mpz_t());
      mpz_mul(mpq_denref(e.get_mpq_t()), row_den[i].get_mpz_t(), col_den[j].get_mpz_t());
      e.canonicalize();
    }
  }
  return m;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  QVector out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sum: shape mismatch");
  QMatrix m(*this);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("difference: shape mismatch");
  QMatrix m(*this);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

QMatrix QMatrix::scaled(const mpq_class& s) const {
  QMatrix m(*this);
  for (auto& x : m.data_) x *= s;
  return m;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

Rref rref(QMatrix m) {
  size_t nnz = 0;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) ++nnz;
  if (m.rows() >= 8 && 2 * nnz >= m.rows() * m.cols()) return rref_fraction_free(m);
  Rref out;
  size_t r = 0;
  mpq_class t;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t piv = r;
    while (piv < m.rows() && sgn(m(piv, c)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = c; j < m.cols(); ++j) swap(m(piv, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (size_t j = c; j < m.cols(); ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
        m(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

Rref rref_fraction_free(const QMatrix& m) {
  // Fraction-free Gauss-Jordan over Z after clearing row denominators: every
  // pivot ends up equal to the last pivot, which divides all entries exactly.
  const size_t nr = m.rows(), nc = m.cols();
  std::vector<mpz_class> z(nr * nc);
  for (size_t i = 0; i < nr; ++i) {
    mpz_class den = 1;
    for (size_t j = 0; j < nc; ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < nc; ++j) {
      const mpq_class& x = m(i, j);
      if (sgn(x) == 0) continue;
      mpz_divexact(z[i * nc + j].get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      z[i * nc + j] *= x.get_num();
    }
  }
  Rref out;
  mpz_class prev = 1, t;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t piv = r;
    while (piv < nr && sgn(z[piv * nc + c]) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (size_t j = 0; j < nc; ++j) swap(z[piv * nc + j], z[r * nc + j]);
    const mpz_class& pr = z[r * nc + c];
    for (size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      mpz_class f = z[i * nc + c];
      for (size_t j = 0; j < nc; ++j) {
        if (j == c) continue;
        mpz_class& e = z[i * nc + j];
        const mpz_class& rj = z[r * nc + j];
        if (sgn(e) == 0 && (sgn(f) == 0 || sgn(rj) == 0)) continue;
        mpz_mul(t.get_mpz_t(), pr.get_mpz_t(), e.get_mpz_t());
        if (sgn(f) != 0) mpz_submul(t.get_mpz_t(), f.get_mpz_t(), rj.get_mpz_t());
        mpz_divexact(e.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i * nc + c] = 0;
    }
    prev = pr;
    out.pivots.push_back(c);
    ++r;
  }
  QMatrix red(nr, nc);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < nc; ++j) {
      if (sgn(z[i * nc + j]) == 0) continue;
      mpq_class& x = red(i, j);
      mpz_set(mpq_numref(x.get_mpq_t()), z[i * nc + j].get_mpz_t());
      mpz_set(mpq_denref(x.get_mpq_t()), prev.get_mpz_t());
      x.canonicalize();
    }
  out.reduced = std::move(red);
  return out;
}

size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix kernel(const QMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return QMatrix::from_columns(basis, m.cols());
}

QMatrix column_space(const QMatrix& m) { return m.select_columns(rref(m).pivots); }

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  size_t n = m.rows();
  Rref r = rref_fraction_free(m.hconcat(QMatrix::identity(n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  QMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

QMatrix solve_exact(const QMatrix& a, const QMatrix& b) {
  size_t n = a.cols(), k = b.cols();
  Rref r = rref(a.hconcat(b));
  for (size_t c : r.pivots)
    if (c >= n) throw std::domain_error("solve_exact: inconsistent system");
  QMatrix x(n, k);
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (size_t j = 0; j < k; ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
  return x;
}

QVector charpoly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: not square");
  const size_t n = m.rows();
  QMatrix h = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = j + 1;
    while (piv < n && sgn(h(piv, j)) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) swap(h(piv, c), h(j + 1, c));
      for (size_t r = 0; r < n; ++r) swap(h(r, piv), h(r, j + 1));
    }
    for (size_t i = j + 2; i < n; ++i) {
      if (sgn(h(i, j)) == 0) continue;
      mpq_class t = h(i, j) / h(j + 1, j);
      for (size_t c = 0; c < n; ++c) h(i, c) -= t * h(j + 1, c);
      for (size_t r = 0; r < n; ++r) h(r, j + 1) += t * h(r, i);
    }
  }
  // p[m] = characteristic polynomial of the leading m x m block.
  std::vector<QVector> p(n + 1);
  p[0] = QVector{1};
  for (size_t mm = 1; mm <= n; ++mm) {
    QVector cur(mm + 1);
    for (size_t d = 0; d < p[mm - 1].size(); ++d) {
      cur[d + 1] += p[mm - 1][d];
      cur[d] -= h(mm - 1, mm - 1) * p[mm - 1][d];
    }
    mpq_class prod = 1;
    for (size_t i = mm - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (sgn(prod) == 0) break;
      mpq_class coef = h(i, mm - 1) * prod;
      for (size_t d = 0; d < p[i].size(); ++d) cur[d] -= coef * p[i][d];
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

QMatrix poly_eval(const QVector& coeffs, const QMatrix& m) {
  size_t n = m.rows();
  QMatrix acc(n, n);
  for (size_t d = coeffs.size(); d-- > 0;) {
    acc = acc * m;
    for (size_t i = 0; i < n; ++i) acc(i, i) += coeffs[d];
  }
  return acc;
}

size_t intersection_dim(const QMatrix& a, const QMatrix& b) {
  return rank(a) + rank(b) - rank(a.hconcat(b));
}

}  // namespace mfgap
