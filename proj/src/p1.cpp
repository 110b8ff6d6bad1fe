#include "mfgap/p1.h"

#include <stdexcept>

#include "mfgap/arith.h"

namespace mfgap {

P1List::P1List(int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("P1List: level must be >= 1");
  if (n > 20000) throw std::invalid_argument("P1List: level too large for the lookup table");
  const size_t nn = static_cast<size_t>(n);
  table_.assign(nn * nn, -1);
  std::vector<int64_t> units;
  for (int64_t u = 1; u <= n; ++u)
    if (gcd(u, n) == 1) units.push_back(u % n);
  for (int64_t c = 0; c < n; ++c) {
    for (int64_t d = 0; d < n; ++d) {
      if (table_[c * nn + d] != -1) continue;
      if (gcd(gcd(c, d), n) != 1) continue;
      int32_t idx = static_cast<int32_t>(reps_.size());
      reps_.push_back({c, d});
      for (int64_t u : units) table_[((u * c) % n) * nn + (u * d) % n] = idx;
    }
  }
}

int64_t P1List::index_or_invalid(int64_t u, int64_t v) const {
  const size_t nn = static_cast<size_t>(n_);
  return table_[static_cast<size_t>(mod(u, n_)) * nn + static_cast<size_t>(mod(v, n_))];
}

size_t P1List::normalize(int64_t u, int64_t v) const {
  int64_t i = index_or_invalid(u, v);
  if (i < 0) throw std::invalid_argument("P1List::normalize: gcd(u, v, N) > 1");
  return static_cast<size_t>(i);
}

Mat2 P1List::lift_to_sl2(size_t i) const { return mfgap::lift_to_sl2(reps_[i][0], reps_[i][1], n_); }

Mat2 lift_to_sl2(int64_t c, int64_t d, int64_t n) {
  if (gcd(gcd(c, d), n) != 1) throw std::invalid_argument("lift_to_sl2: gcd(c, d, N) > 1");
  if (n == 1) return {1, 0, 0, 1};
  c = mod(c, n);
  d = mod(d, n);
  if (c == 0) c = n;
  // Shift d by multiples of N until gcd(c, d) = 1; this terminates because
  // gcd(c, d, N) = 1.
  for (int64_t t = 0;; ++t) {
    int64_t dd = d + t * n;
    if (gcd(c, dd) == 1) {
      ExtGcd e = ext_gcd(dd, c);  // e.x*dd + e.y*c = 1
      return {e.x, -e.y, c, dd};
    }
  }
}

}  // namespace mfgap
