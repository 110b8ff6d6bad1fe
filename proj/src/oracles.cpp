#include "mfgap/oracles.h"

#include <stdexcept>
#include <string>

#include "mfgap/invariants.h"

namespace mfgap::oracles {

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  const size_t n = std::min(a.size(), b.size());
  IntSeries out(n);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; i + j < n; ++j)
      if (sgn(b[j]) != 0) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

QExpansion to_qexpansion(const IntSeries& s, int64_t weight, int64_t level) {
  std::vector<mpq_class> c;
  for (size_t n = 1; n < s.size(); ++n) c.emplace_back(s[n]);
  return QExpansion(std::move(c), weight, level);
}

IntSeries eisenstein_E(int k, int64_t precision) {
  if (k != 4 && k != 6) throw std::invalid_argument("eisenstein_E: only k = 4 and k = 6 are supported");
  if (precision < 0) throw std::invalid_argument("eisenstein_E: negative precision");
  const unsigned long power = k == 4 ? 3 : 5;
  const long factor = k == 4 ? 240 : -504;
  IntSeries out(static_cast<size_t>(precision) + 1);
  out[0] = 1;
  mpz_class t;
  for (int64_t d = 1; d <= precision; ++d) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
    for (int64_t n = d; n <= precision; n += d) out[n] += t;
  }
  for (int64_t n = 1; n <= precision; ++n) out[n] *= factor;
  return out;
}

IntSeries eta_expand(const EtaProduct& e, int64_t precision) {
  if (precision < 0) throw std::invalid_argument("eta_expand: negative precision");
  int64_t shift24 = 0;
  for (const auto& f : e) {
    if (f.scale < 1) throw std::invalid_argument("eta_expand: scale must be positive");
    shift24 += f.scale * f.exponent;
  }
  if (shift24 % 24 != 0)
    throw std::invalid_argument("eta_expand: leading exponent " + std::to_string(shift24) + "/24 is not integral");
  const int64_t shift = shift24 / 24;
  const size_t len = static_cast<size_t>(precision) + 1;
  IntSeries s(len);
  s[0] = 1;
  // Multiply by (1 - q^j)^{+-1} one factor at a time.
  for (const auto& f : e) {
    const int64_t r = f.exponent;
    for (int64_t n = 1; f.scale * n <= precision; ++n) {
      const size_t j = static_cast<size_t>(f.scale * n);
      for (int64_t rep = 0; rep < (r >= 0 ? r : -r); ++rep) {
        if (r > 0) {
          for (size_t i = len; i-- > j;) s[i] -= s[i - j];
        } else {
          for (size_t i = j; i < len; ++i) s[i] += s[i - j];
        }
      }
    }
  }
  IntSeries out(len);
  for (size_t i = 0; i < len; ++i) {
    int64_t target = static_cast<int64_t>(i) + shift;
    if (target >= 0 && target < static_cast<int64_t>(len)) out[static_cast<size_t>(target)] = s[i];
  }
  return out;
}

IntSeries delta(int64_t precision) { return eta_expand({{1, 24}}, precision); }

std::vector<mpz_class> tau_table(int64_t count) {
  IntSeries d = delta(count);
  return std::vector<mpz_class>(d.begin() + 1, d.end());
}

SpaceBasis victor_miller_basis(int64_t k, int64_t precision) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("victor_miller_basis: weight must be even and >= 2");
  const int64_t d = invariants::dim_sk(Level(1), Weight(k));
  std::vector<QVector> series;
  IntSeries e4 = eisenstein_E(4, precision), e6 = eisenstein_E(6, precision), dl = delta(precision);
  IntSeries delta_pow(static_cast<size_t>(precision) + 1);
  delta_pow[0] = 1;
  for (int64_t j = 1; j <= d; ++j) {
    delta_pow = series_mul(delta_pow, dl);
    const int64_t rest = k - 12 * j;
    int64_t b = (rest % 4 == 0) ? 0 : 1;
    int64_t a = (rest - 6 * b) / 4;
    if (a < 0 || 4 * a + 6 * b != rest) throw std::logic_error("victor_miller_basis: no monomial of weight " +
                                                              std::to_string(rest));
    IntSeries f = delta_pow;
    for (int64_t i = 0; i < a; ++i) f = series_mul(f, e4);
    for (int64_t i = 0; i < b; ++i) f = series_mul(f, e6);
    QVector v(f.begin() + 1, f.end());
    series.push_back(std::move(v));
  }
  return echelon_basis(series, 1, k, precision);
}

}  // namespace mfgap::oracles
