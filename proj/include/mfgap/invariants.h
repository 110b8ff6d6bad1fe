#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mfgap {

/// Level N >= 1 of the congruence subgroup Gamma_0(N).
class Level {
 public:
  explicit Level(int64_t n);
  int64_t value() const { return n_; }

 private:
  int64_t n_;
};

/// Positive even weight k >= 2.
class Weight {
 public:
  explicit Weight(int64_t k);
  int64_t value() const { return k_; }

 private:
  int64_t k_;
};

struct LevelInvariants {
  int64_t level = 1;
  int64_t index = 1;   // [SL_2(Z) : Gamma_0(N)]
  int64_t eps2 = 0;    // elliptic points of order 2
  int64_t eps3 = 0;    // elliptic points of order 3
  int64_t eps_inf = 0; // cusps
  int64_t genus = 0;
};

struct AlphaPair {
  int64_t alpha2 = 0;
  int64_t alpha3 = 0;
  bool operator==(const AlphaPair&) const = default;
};

namespace invariants {

int64_t index(Level n);
int64_t eps2(Level n);
int64_t eps3(Level n);
int64_t eps_inf(Level n);
/// Throws std::logic_error if the genus equation gives a non-integer or
/// negative value.
int64_t genus(Level n);
LevelInvariants level_invariants(Level n);

/// dim S_k(Gamma_0(N)); the genus when k = 2.
int64_t dim_sk(Level n, Weight k);

/// Forced zeros at elliptic points for weight K (K even, any sign class).
AlphaPair alpha_pair(Level n, int64_t big_k);

/// Valence bound floor(k * I(N) / 12), the largest possible ord at infinity.
int64_t valence_bound(Level n, Weight k);
/// floor(k * I(N) / 12) + 1 coefficients determine a form.
int64_t sturm_bound(Level n, Weight k);

/// Throws std::invalid_argument unless p is prime, p does not divide N and
/// p >= max(5, k + 1).
void check_triple(Level n, Weight k, int64_t p);
/// Throws std::invalid_argument unless p is prime and does not divide N.
void check_prime_coprime(Level n, int64_t p);
/// True iff p >= max(5, k + 1), the range in which the ord bound is a theorem.
inline bool in_theorem_range(Weight k, int64_t p) { return p >= 5 && p >= k.value() + 1; }

/// Upper bound for ord at infinity under the valuation hypotheses (a
/// theorem when in_theorem_range; the formula itself needs only p prime, p ∤ N):
/// ((k-1)p+1)/12 * I(N) - alpha2/2 - alpha3/3 - eps_inf(N) + 1.
mpq_class amr_ord_bound(Level n, Weight k, int64_t p);

/// Left-hand side of the inequality that must be >= 1:
/// (k-2)/12 I(N) + (floor(k/4) - (k-1)/4) eps2(pN)
///   + (floor(k/3) - (k-1)/3) eps3(pN) + alpha2/2 + alpha3/3.
mpq_class main_inequality_lhs(Level n, Weight k, int64_t p);

/// Which reduced inequality certifies the main inequality for a triple.
enum class ReducedForm {
  IndexOnly,      // (k-2)/12 I(N) >= 1
  IndexEps2,      // (k-2)/12 I(N) + eps2(N)/2 >= 1
  IndexEps3,      // (k-2)/12 I(N) + 2 eps3(N)/3 >= 1
  IndexEps2Eps3,  // (k-2)/12 I(N) + eps2(N)/2 + 2 eps3(N)/3 >= 1
  Alpha2Only,     // the main inequality with alpha3 = 0
  Alpha3Only,     // the main inequality with alpha2 = 0
  Full,           // the main inequality itself
};
std::string to_string(ReducedForm f);

struct CaseReport {
  int64_t level = 0, weight = 0, prime = 0;
  int64_t big_k = 0;  // (k-1)p + 1
  AlphaPair alpha;
  bool alpha2_zero = true, alpha3_zero = true;
  bool eps2_zero = true, eps3_zero = true;  // of N
  int modulus = 12;            // modulus of the congruence class used
  int k_class = 0, p_class = 0;
  int big_k_class12 = 0;
  ReducedForm form = ReducedForm::Full;
  mpq_class lhs;
  mpq_class reduced_value;
  bool exact_reduction = false;  // reduced value equals lhs
  bool certified = false;        // reduced_value >= 1 and reduced_value <= lhs
  std::string note;
};

CaseReport classify_case(Level n, Weight k, int64_t p);

struct ScanRow {
  CaseReport report;
  mpq_class amr_bound;
  int64_t dim_pn = 0;
  bool identity_holds = false;  // dim - amr_bound == lhs - 1
  bool lhs_ok = false;          // lhs >= 1
  bool ok() const { return identity_holds && lhs_ok && report.certified; }
};

struct ScanRange {
  int64_t kmin = 4, kmax = 24, nmax = 300, pmax = 199;
};

/// Every valid (k, N, p) in the range, sorted by (k, N, p). Runs on up to
/// `threads` worker threads; the output does not depend on the count.
std::vector<ScanRow> scan(const ScanRange& range, unsigned threads = 1);

/// All N with dim S_k(Gamma_0(N)) = 0, k >= 4 even. The search stops once the
/// dimension has been positive for 20 consecutive levels after the last zero.
std::vector<int64_t> vanishing_levels(Weight k);

}  // namespace invariants
}  // namespace mfgap
