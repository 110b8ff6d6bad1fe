#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "mfgap/linalg.h"
#include "mfgap/p1.h"

namespace mfgap {

/// Manin symbol [X^i Y^(k-2-i), (c:d)].
struct ManinSymbol {
  int degree = 0;        // i in 0..k-2
  size_t p1_index = 0;   // class (c:d) in P1List
};

/// Homogeneous polynomial of degree w in X, Y; entry t is the coefficient of
/// X^t Y^(w-t).
using HomPoly = std::vector<mpz_class>;

/// Row i holds the coefficients of (aX+bY)^i (cX+dY)^(w-i), i.e. the image of
/// the monomial X^i Y^(w-i) under P(X,Y) -> P(aX+bY, cX+dY).
std::vector<HomPoly> monomial_transform(const Mat2& h, int w);

/// P(X,Y) -> P(aX+bY, cX+dY).
HomPoly transform(const HomPoly& p, const Mat2& h);

/// Merel's set of matrices (a b; c d) with ad - bc = n, a > b >= 0, d > c >= 0.
std::vector<Mat2> heilbronn_merel(int64_t n);

/// Cusp r/s in lowest terms with s >= 0; infinity is 1/0.
struct Cusp {
  int64_t num = 1, den = 0;
  static Cusp make(int64_t r, int64_t s);
  Cusp moved(const Mat2& g) const;
  bool operator==(const Cusp&) const = default;
};

/// Formal modular symbol P{alpha, beta} with rational polynomial coefficients.
struct PathTerm {
  QVector poly;  // coefficients over X^t Y^(w-t)
  Cusp alpha, beta;
};

/// Finite presentation of weight-k modular symbols for Gamma_0(N) in the
/// quotient by the star involution (sign +1): Manin generators, the 2-term
/// and 3-term relations, the boundary map and the cuspidal subspace.
///
/// Construction asserts that the cuspidal subspace has dimension
/// dim S_k(Gamma_0(N)); a mismatch throws std::logic_error.
class MSPresentation {
 public:
  MSPresentation(int64_t level, int64_t weight);

  int64_t level() const { return level_; }
  int64_t weight() const { return weight_; }
  const P1List& p1() const { return p1_; }

  size_t symbol_count() const { return static_cast<size_t>(weight_ - 1) * p1_.size(); }
  size_t symbol_id(int degree, size_t p1_index) const {
    return static_cast<size_t>(degree) * p1_.size() + p1_index;
  }
  ManinSymbol symbol(size_t id) const {
    return {static_cast<int>(id / p1_.size()), id % p1_.size()};
  }

  /// Number of Manin generators surviving the 2-term relations.
  size_t free_generator_count() const { return free_count_; }
  /// Dimension of the plus quotient.
  size_t dim() const { return basis_symbols_.size(); }
  /// Dimension of the cuspidal plus subspace.
  size_t cuspidal_dim() const { return cusp_basis_.cols(); }
  size_t boundary_class_count() const { return boundary_.rows(); }

  /// Manin symbol representing quotient basis element j.
  size_t basis_symbol(size_t j) const { return basis_symbols_[j]; }
  /// Image of a Manin symbol in the quotient, as a sparse vector.
  const std::vector<std::pair<uint32_t, mpq_class>>& reduce_symbol(size_t id) const {
    return symbol_to_quotient_[id];
  }
  QVector reduce_symbol_dense(size_t id) const;

  /// Boundary map: rows indexed by star-orbits of cusp classes.
  const QMatrix& boundary() const { return boundary_; }
  /// Cuspidal basis, columns in reduced column echelon form.
  const QMatrix& cuspidal_basis() const { return cusp_basis_; }
  /// Coordinates of v (in the plus quotient) with respect to cuspidal_basis();
  /// throws std::logic_error if v is not cuspidal.
  QVector cuspidal_coordinates(const QVector& v) const;

  /// Cusp class (star-orbit) of g(infinity) for g with bottom row class i.
  size_t cusp_class_of(size_t p1_index) const { return cusp_class_[p1_index]; }

  /// Reduce a formal path symbol to the quotient using continued fractions.
  QVector reduce_path(const PathTerm& t) const;
  /// The formal symbol g(X^i Y^(k-2-i){0, inf}) for a Manin symbol.
  PathTerm manin_to_path(const ManinSymbol& s) const;

  /// T_p on the plus quotient (p prime) by Merel's Heilbronn matrices.
  QMatrix hecke_heilbronn(int64_t p) const;
  /// T_n on the plus quotient from coset representatives (a b; 0 d), ad = n,
  /// 0 <= b < d, gcd(a, N) = 1, with continued-fraction reconversion.
  QMatrix hecke_cosets(int64_t n) const;

  /// Matrix of an operator on the cuspidal subspace in cuspidal coordinates.
  QMatrix restrict_to_cuspidal(const QMatrix& op) const;

 private:
  void build_relations();
  void build_boundary();

  int64_t level_;
  int64_t weight_;
  P1List p1_;
  size_t free_count_ = 0;
  std::vector<size_t> basis_symbols_;
  std::vector<std::vector<std::pair<uint32_t, mpq_class>>> symbol_to_quotient_;
  std::vector<size_t> cusp_class_;
  QMatrix boundary_;
  QMatrix cusp_basis_;
  std::vector<size_t> cusp_pivots_;
};

/// Apply delta (det > 0) to a formal symbol: P{a, b} -> (delta.P){delta a,
/// delta b}, where delta.P(X,Y) = P(adj(delta)(X,Y)).
PathTerm act_matrix(const PathTerm& x, const Mat2& delta);

/// Hecke operators on the cuspidal plus subspace, T_p for primes computed on
/// demand and cached; composite n through multiplicativity and the
/// prime-power recursion. Thread-safe.
class CuspidalHecke {
 public:
  explicit CuspidalHecke(std::shared_ptr<const MSPresentation> ms) : ms_(std::move(ms)) {}

  const MSPresentation& presentation() const { return *ms_; }
  size_t dim() const { return ms_->cuspidal_dim(); }

  /// T_p for a prime p (U_p when p | N).
  QMatrix prime(int64_t p) const;
  /// T_n, n >= 1.
  QMatrix hecke(int64_t n) const;
  /// Precompute T_p for all primes p <= bound using up to `threads` workers.
  void precompute(int64_t bound, unsigned threads) const;

  /// Vectors T_n v for n = 1..count (index n-1).
  std::vector<QVector> orbit(const QVector& v, int64_t count) const;

 private:
  std::shared_ptr<const MSPresentation> ms_;
  mutable std::mutex mu_;
  mutable std::map<int64_t, QMatrix> primes_;
};

}  // namespace mfgap
