#pragma once

// Independent brute-force counts used as ground truth by the tests.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace brute {

inline int64_t gcd3(int64_t a, int64_t b, int64_t c) { return std::gcd(std::gcd(a, b), c); }

/// Normalized representatives of P^1(Z/N): pairs up to unit scaling.
inline std::vector<std::pair<int64_t, int64_t>> p1_points(int64_t n) {
  std::vector<int64_t> units;
  for (int64_t u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  if (n == 1) return {{0, 0}};
  std::set<std::pair<int64_t, int64_t>> seen;
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t c = 0; c < n; ++c)
    for (int64_t d = 0; d < n; ++d) {
      if (gcd3(c, d, n) != 1) continue;
      std::pair<int64_t, int64_t> best{n, n};
      for (int64_t u : units) best = std::min(best, {c * u % n, d * u % n});
      if (seen.insert(best).second) out.push_back(best);
    }
  return out;
}

inline int64_t p1_count(int64_t n) { return static_cast<int64_t>(p1_points(n).size()); }

inline int64_t root_count(int64_t n, int64_t b, int64_t c) {
  int64_t count = 0;
  for (int64_t x = 0; x < n; ++x)
    if (((x * x + b * x + c) % n + n) % n == 0) ++count;
  return count;
}

/// Elliptic points of order 2: solutions of x^2 + 1 = 0 mod N.
inline int64_t eps2(int64_t n) { return root_count(n, 0, 1); }
/// Elliptic points of order 3: solutions of x^2 + x + 1 = 0 mod N.
inline int64_t eps3(int64_t n) { return root_count(n, 1, 1); }

/// Cusps: orbits of P^1(Z/N) under (c : d) -> (c : c + d).
inline int64_t cusp_count(int64_t n) {
  if (n == 1) return 1;
  auto pts = p1_points(n);
  std::set<std::pair<int64_t, int64_t>> all(pts.begin(), pts.end());
  std::vector<int64_t> units;
  for (int64_t u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  auto normalize = [&](int64_t c, int64_t d) {
    std::pair<int64_t, int64_t> best{n, n};
    for (int64_t u : units) best = std::min(best, {c * u % n, d * u % n});
    return best;
  };
  std::set<std::pair<int64_t, int64_t>> visited;
  int64_t orbits = 0;
  for (const auto& s : pts) {
    if (visited.count(s)) continue;
    ++orbits;
    auto cur = s;
    while (!visited.count(cur)) {
      visited.insert(cur);
      cur = normalize(cur.first, (cur.first + cur.second) % n);
    }
  }
  return orbits;
}

}  // namespace brute
