#include "mfgap/qexpansion.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mfgap {

QExpansion::QExpansion(int64_t precision, int64_t weight, int64_t level)
    : coeffs_(static_cast<size_t>(std::max<int64_t>(precision, 0))), weight_(weight), level_(level) {}

QExpansion::QExpansion(std::vector<mpq_class> coeffs, int64_t weight, int64_t level)
    : coeffs_(std::move(coeffs)), weight_(weight), level_(level) {}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

std::optional<int64_t> QExpansion::ord() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int64_t>(i + 1);
  return std::nullopt;
}

QExpansion QExpansion::truncated(int64_t precision) const {
  if (precision > this->precision()) throw std::invalid_argument("truncated: precision exceeds available");
  return QExpansion(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + precision), weight_, level_);
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
  int64_t b = std::min(precision(), o.precision());
  QExpansion r(b, weight_, level_);
  for (int64_t n = 1; n <= b; ++n) r[n] = (*this)[n] + o[n];
  return r;
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
  int64_t b = std::min(precision(), o.precision());
  QExpansion r(b, weight_, level_);
  for (int64_t n = 1; n <= b; ++n) r[n] = (*this)[n] - o[n];
  return r;
}

QExpansion QExpansion::scaled(const mpq_class& c) const {
  QExpansion r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::string QExpansion::to_string(int64_t terms) const {
  std::ostringstream os;
  bool first = true;
  for (int64_t n = 1; n <= precision() && terms > 0; ++n) {
    const mpq_class& c = (*this)[n];
    if (sgn(c) == 0) continue;
    --terms;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (a != 1) os << a << "*";
    os << "q^" << n;
  }
  if (first) os << "0";
  os << " + O(q^" << precision() + 1 << ")";
  return os.str();
}

QExpansion apply_up(const QExpansion& f, int64_t p) {
  if (p < 1) throw std::invalid_argument("apply_up: p must be positive");
  if (f.precision() < p) throw std::invalid_argument("apply_up: precision too small");
  int64_t b = f.precision() / p;
  QExpansion r(b, f.weight(), f.level());
  for (int64_t n = 1; n <= b; ++n) r[n] = f[p * n];
  return r;
}

QExpansion apply_vp(const QExpansion& f, int64_t p) {
  if (p < 1) throw std::invalid_argument("apply_vp: p must be positive");
  QExpansion r(p * f.precision(), f.weight(), f.level() * p);
  for (int64_t n = 1; n <= f.precision(); ++n) r[p * n] = f[n];
  return r;
}

namespace {

int64_t vp_integer(const mpz_class& z, int64_t p) {
  mpz_class t = z;
  int64_t v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

}  // namespace

int64_t vp_rational(const mpq_class& x, int64_t p) {
  if (sgn(x) == 0) throw std::domain_error("vp_rational: zero");
  return vp_integer(x.get_num(), p) - vp_integer(x.get_den(), p);
}

std::optional<int64_t> vp_valuation(const QExpansion& f, int64_t p) {
  std::optional<int64_t> v;
  for (const auto& c : f.coefficients()) {
    if (sgn(c) == 0) continue;
    int64_t w = vp_rational(c, p);
    if (!v || w < *v) v = w;
  }
  return v;
}

QExpansion normalize_p(const QExpansion& f, int64_t /*p*/) {
  auto o = f.ord();
  if (!o) throw std::domain_error("normalize_p: zero series");
  mpz_class den = 1, num = 0;
  for (const auto& c : f.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : f.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_class z = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(f[*o]) < 0) scale = -scale;
  return f.scaled(scale);
}

}  // namespace mfgap
