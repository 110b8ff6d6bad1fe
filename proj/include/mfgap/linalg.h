#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mfgap {

using QVector = std::vector<mpq_class>;

/// Dense row-major matrix over Q. Sizes in this project stay in the low
/// hundreds, so a plain dense representation is adequate.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(size_t n);
  static QMatrix from_columns(const std::vector<QVector>& cols, size_t nrows);
  static QMatrix from_rows(const std::vector<QVector>& rows, size_t ncols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  mpq_class& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  QVector row(size_t i) const;
  QVector column(size_t j) const;
  QMatrix select_columns(const std::vector<size_t>& idx) const;
  QMatrix select_rows(const std::vector<size_t>& idx) const;
  /// Horizontal concatenation [*this | other].
  QMatrix hconcat(const QMatrix& other) const;

  QMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const mpq_class& s) const;
  bool operator==(const QMatrix& o) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

struct Rref {
  QMatrix reduced;
  std::vector<size_t> pivots;  // pivot column of each non-zero row
};

/// Reduced row echelon form (pivots normalized to 1).
Rref rref(QMatrix m);
/// Same result as rref, computed by fraction-free elimination over Z. Faster
/// for dense matrices with large entries; slower for sparse ones.
Rref rref_fraction_free(const QMatrix& m);
size_t rank(const QMatrix& m);

/// Columns form the canonical basis of {x : m x = 0}: one vector per free
/// column, with a 1 in that free position.
QMatrix kernel(const QMatrix& m);

/// Columns form a basis of the column space (the pivot columns of m).
QMatrix column_space(const QMatrix& m);

/// Inverse of a square matrix; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

/// Exact solution of a x = b, or nullopt if inconsistent. When a has
/// dependent columns the free variables are set to zero.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Solve a X = b column by column; throws std::domain_error if inconsistent.
QMatrix solve_exact(const QMatrix& a, const QMatrix& b);

/// Monic characteristic polynomial, coefficients in increasing degree.
QVector charpoly(const QMatrix& m);

/// Evaluate a polynomial (increasing-degree coefficients) at a square matrix.
QMatrix poly_eval(const QVector& coeffs, const QMatrix& m);

/// Dimension of the intersection of the column spaces of a and b.
size_t intersection_dim(const QMatrix& a, const QMatrix& b);

}  // namespace mfgap
