#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfgap/linalg.h"
#include "mfgap/modsym.h"
#include "mfgap/qexpansion.h"

namespace mfgap {

/// Integral echelon basis f_i = a_i q^{c_i} + O(q^{c_i + 1}) of S_k(Gamma_0(N)),
/// c_1 < ... < c_d, each row primitive with positive leading coefficient and
/// zero at the other rows' pivots.
struct SpaceBasis {
  int64_t level = 1;
  int64_t weight = 2;
  int64_t precision = 0;
  std::vector<std::vector<mpz_class>> rows;  // rows[i][n-1] = a_n(f_i)
  std::vector<int64_t> pivots;

  size_t dim() const { return rows.size(); }
  QExpansion row_expansion(size_t i) const;
  /// Coordinates of f in this basis using the first min(precision,
  /// f.precision()) coefficients; nullopt if f is not in the span there.
  std::optional<QVector> coordinates(const QExpansion& f) const;
  QExpansion combination(const QVector& coords) const;
  SpaceBasis truncated(int64_t precision) const;
  bool operator==(const SpaceBasis&) const = default;
};

/// Builds the canonical SpaceBasis (reduced echelon form, rows primitive) of
/// the row space of arbitrary rational series.
SpaceBasis echelon_basis(const std::vector<QVector>& series, int64_t level, int64_t weight, int64_t precision,
                         QMatrix* transform = nullptr);

namespace msengine {

/// Default precision floor(k I(N)/12) + 1 + 10.
int64_t default_precision(int64_t level, int64_t weight);

struct BuildOptions {
  unsigned threads = 1;
};

/// Cusp forms of weight k on Gamma_0(N) to precision B from modular symbols.
///
/// Fixing a cuspidal symbol v that generates the cuspidal plus space as a
/// Hecke module, every form is f_L = sum_n L(T_n v) q^n for a unique linear
/// functional L. The basis rows correspond to functionals F_r, and a Hecke
/// operator T acts on forms by L -> L T, which gives exact operator matrices
/// without extra q-expansion precision.
class CuspSpace {
 public:
  static std::shared_ptr<const CuspSpace> build(int64_t level, int64_t weight, int64_t precision,
                                                const BuildOptions& opts = {});

  int64_t level() const { return basis_.level; }
  int64_t weight() const { return basis_.weight; }
  int64_t precision() const { return basis_.precision; }
  size_t dim() const { return basis_.dim(); }
  const SpaceBasis& basis() const { return basis_; }
  const CuspidalHecke& hecke() const { return *hecke_; }
  /// Coordinates (in cuspidal symbol coordinates) of the generating vector.
  const QVector& generator() const { return generator_; }

  /// Matrix of a Hecke-algebra element, given on cuspidal symbols, acting on
  /// forms in basis coordinates (column convention: coords(T f) = M coords(f)).
  QMatrix on_forms(const QMatrix& symbol_op) const;
  /// T_n on forms in basis coordinates.
  QMatrix hecke_on_forms(int64_t n) const;

 private:
  SpaceBasis basis_;
  std::shared_ptr<const MSPresentation> ms_;
  std::shared_ptr<CuspidalHecke> hecke_;
  QVector generator_;
  QMatrix functionals_;      // row r = F_r
  QMatrix functionals_inv_;
};

/// Convenience: the SpaceBasis alone.
SpaceBasis qexpansion_basis(int64_t level, int64_t weight, int64_t precision, const BuildOptions& opts = {});

struct CertificateEntry {
  int64_t m = 0;
  int64_t checked_precision = 0;  // floor(B / m)
  bool meaningful = false;        // every pivot <= checked_precision
  bool pass = false;
  std::string detail;
};

/// Checks that the span of the basis is stable under the coefficient-side
/// rule a_n(T_m f) = sum_{d | gcd(n, m), gcd(d, N) = 1} d^(k-1) a_{nm/d^2}(f)
/// for 2 <= m <= max_m, using the first floor(B/m) coefficients.
std::vector<CertificateEntry> hecke_stability_certificate(const SpaceBasis& basis, int64_t max_m = 5);
/// True iff every entry is meaningful and passes.
bool certificate_passes(const std::vector<CertificateEntry>& cert);
/// Smallest precision for which the certificate with max_m is meaningful.
int64_t certificate_precision(int64_t level, int64_t weight, int64_t max_m = 5);

}  // namespace msengine
}  // namespace mfgap
