#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "mfgap/cuspspace.h"
#include "mfgap/qexpansion.h"

namespace mfgap::oracles {

/// Power series with integer coefficients c[0..B] (c[n] is the q^n term).
using IntSeries = std::vector<mpz_class>;

IntSeries series_mul(const IntSeries& a, const IntSeries& b);
/// Drops the constant term: coefficients 1..B as a QExpansion.
QExpansion to_qexpansion(const IntSeries& s, int64_t weight, int64_t level);

/// E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n,
/// to precision B. Throws std::invalid_argument for other k.
IntSeries eisenstein_E(int k, int64_t precision);

struct EtaFactor {
  int64_t scale = 1;     // m in eta(m z)
  int64_t exponent = 0;  // r
};
using EtaProduct = std::vector<EtaFactor>;

/// q^{sum m r / 24} prod_{m,r} prod_n (1 - q^{m n})^r to precision B.
/// Throws std::invalid_argument if sum m r is not divisible by 24.
IntSeries eta_expand(const EtaProduct& e, int64_t precision);

/// Delta = eta(z)^24 to precision B.
IntSeries delta(int64_t precision);
/// tau(1..B), index n - 1.
std::vector<mpz_class> tau_table(int64_t count);

/// Level-1 cusp forms of weight k from Delta^j E_4^a E_6^b, in canonical
/// echelon form. Empty when the space is zero.
SpaceBasis victor_miller_basis(int64_t k, int64_t precision);

}  // namespace mfgap::oracles
