#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mfgap {

/// Truncated q-expansion sum_{n=1}^{B} a(n) q^n of a cusp form. Coefficients
/// of q^n are known for 1 <= n <= precision().
class QExpansion {
 public:
  QExpansion() = default;
  explicit QExpansion(int64_t precision, int64_t weight = 0, int64_t level = 0);
  QExpansion(std::vector<mpq_class> coeffs, int64_t weight, int64_t level);

  int64_t precision() const { return static_cast<int64_t>(coeffs_.size()); }
  int64_t weight() const { return weight_; }
  int64_t level() const { return level_; }
  void set_level(int64_t level) { level_ = level; }

  /// Coefficient of q^n, 1 <= n <= precision.
  const mpq_class& operator[](int64_t n) const { return coeffs_.at(static_cast<size_t>(n - 1)); }
  mpq_class& operator[](int64_t n) { return coeffs_.at(static_cast<size_t>(n - 1)); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first non-zero coefficient; nullopt for a zero truncation.
  std::optional<int64_t> ord() const;

  QExpansion truncated(int64_t precision) const;
  QExpansion operator+(const QExpansion& o) const;
  QExpansion operator-(const QExpansion& o) const;
  QExpansion scaled(const mpq_class& c) const;
  bool operator==(const QExpansion& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string(int64_t terms = 8) const;

 private:
  std::vector<mpq_class> coeffs_;
  int64_t weight_ = 0;
  int64_t level_ = 0;
};

/// a(n) -> a(pn). Output precision floor(B/p); throws if B < p.
QExpansion apply_up(const QExpansion& f, int64_t p);
/// q -> q^p. Output precision p*B.
QExpansion apply_vp(const QExpansion& f, int64_t p);

/// v_p(f) = min over known coefficients of v_p(a(n)); nullopt stands for +inf.
std::optional<int64_t> vp_valuation(const QExpansion& f, int64_t p);
/// p-adic valuation of a non-zero rational.
int64_t vp_rational(const mpq_class& x, int64_t p);

/// Scales f to a primitive integral series (content 1, leading coefficient
/// positive), so that v_p = 0 for every p. Throws on zero input.
QExpansion normalize_p(const QExpansion& f, int64_t p);

}  // namespace mfgap
