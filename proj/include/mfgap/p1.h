#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mfgap {

/// 2x2 integer matrix (a b; c d).
struct Mat2 {
  int64_t a = 1, b = 0, c = 0, d = 1;
  int64_t det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  /// Adjugate (d -b; -c a).
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  bool operator==(const Mat2&) const = default;
};

/// The projective line over Z/NZ: pairs (c, d) with gcd(c, d, N) = 1 modulo
/// scaling by units. Its size is the index of Gamma_0(N) in SL_2(Z), and
/// class (c:d) labels the coset of matrices with bottom row (c, d).
class P1List {
 public:
  explicit P1List(int64_t n);

  int64_t level() const { return n_; }
  size_t size() const { return reps_.size(); }

  /// Canonical representative of class i, entries in [0, N).
  const std::array<int64_t, 2>& rep(size_t i) const { return reps_[i]; }

  /// Index of the class of (u, v); -1 when gcd(u, v, N) > 1.
  int64_t index_or_invalid(int64_t u, int64_t v) const;
  /// Index of the class of (u, v); throws std::invalid_argument when
  /// gcd(u, v, N) > 1.
  size_t normalize(int64_t u, int64_t v) const;

  /// A matrix in SL_2(Z) whose bottom row reduces to the representative of
  /// class i modulo N.
  Mat2 lift_to_sl2(size_t i) const;

 private:
  int64_t n_;
  std::vector<std::array<int64_t, 2>> reps_;
  std::vector<int32_t> table_;  // (u mod N, v mod N) -> index or -1
};

/// SL_2(Z) matrix with bottom row congruent to (c, d) mod N; requires
/// gcd(c, d, N) = 1.
Mat2 lift_to_sl2(int64_t c, int64_t d, int64_t n);

}  // namespace mfgap
