#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mfgap/cuspspace.h"
#include "mfgap/linalg.h"
#include "mfgap/qexpansion.h"

namespace mfgap::heckeops {

/// Exact operator on S_k(pN) in SpaceBasis coordinates, column convention:
/// coords(T f) = matrix * coords(f).
struct OperatorMatrix {
  std::string label;
  QMatrix matrix;
};

/// S_k(N) and S_k(pN) built at a common precision.
struct Spaces {
  int64_t level = 1;  // N
  int64_t weight = 2;
  int64_t prime = 2;
  std::shared_ptr<const msengine::CuspSpace> lower;    // S_k(N)
  std::shared_ptr<const msengine::CuspSpace> ambient;  // S_k(pN)
};

/// precision 0 selects the default precision of S_k(pN).
Spaces build_spaces(int64_t n, int64_t k, int64_t p, int64_t precision = 0, const msengine::BuildOptions& opts = {});

struct OldNewSplit {
  size_t lower_dim = 0;
  /// Columns g_1..g_d then V_p g_1..V_p g_d, in ambient coordinates.
  QMatrix old_basis;
  /// Columns spanning the p-new complement.
  QMatrix new_basis;
  /// Primes l whose Hecke operators separated new from old.
  std::vector<int64_t> separating_primes;

  size_t dim_old() const { return old_basis.cols(); }
  size_t dim_new() const { return new_basis.cols(); }
};

/// Coordinates of g in S_k(N) viewed at level pN, and of V_p g. Throws
/// std::logic_error if either is missing from the ambient span.
QMatrix old_embedding(const Spaces& s);

/// Old space plus the sum of the images of chi_old(T_l), where chi_old is
/// the characteristic polynomial of T_l on the old space, over primes
/// l not dividing pN. Throws std::logic_error unless old + new is a direct
/// sum of the full dimension.
OldNewSplit old_new_split(const Spaces& s);

OperatorMatrix up_operator(const Spaces& s);
OperatorMatrix hecke_operator(const Spaces& s, int64_t n);

/// W_p on S_k(pN) from the old/new blocks: g -> p^{k/2} V_p g,
/// V_p g -> p^{-k/2} g, and -p^{1-k/2} U_p on the new block. Throws
/// std::logic_error("Atkin–Lehner assembly failed") unless W_p^2 = 1.
OperatorMatrix atkin_lehner(const Spaces& s, const OldNewSplit& split, const OperatorMatrix& up);

/// Tr = 1 + p^{1-k/2} U_p W_p as an operator on S_k(pN).
OperatorMatrix trace_operator(const Spaces& s, const OperatorMatrix& up, const OperatorMatrix& w);

/// Tr(f) as a form of level N. f must be known to the largest ambient pivot;
/// throws std::logic_error if the image leaves the level-N span.
QExpansion trace_map(const Spaces& s, const OperatorMatrix& trace, const QExpansion& f);

/// Columns: canonical kernel basis of W_p + p^{1-k/2} U_p. Throws
/// std::logic_error unless dim S = dim S_k(pN) - dim S_k(N).
QMatrix subspace_S(const Spaces& s, const OperatorMatrix& up, const OperatorMatrix& w);

/// The form with ambient coordinates c.
QExpansion form_of(const Spaces& s, const QVector& coords);

/// Everything for one triple (N, k, p).
struct OperatorStack {
  Spaces spaces;
  OldNewSplit split;
  OperatorMatrix up;
  OperatorMatrix w;
  OperatorMatrix trace;
  QMatrix s_basis;
};

OperatorStack build_operator_stack(int64_t n, int64_t k, int64_t p, int64_t precision = 0,
                                   const msengine::BuildOptions& opts = {});

/// p^e for an integer e of either sign.
mpq_class prime_power(int64_t p, int64_t e);

}  // namespace mfgap::heckeops
