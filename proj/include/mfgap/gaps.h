#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mfgap/cuspspace.h"

namespace mfgap::gaps {

/// Leading exponents of the echelon basis of S_k(N). W_k(N), the forms with
/// ord > dim, is spanned by the rows whose pivot exceeds dim.
struct GapData {
  int64_t level = 1;
  int64_t weight = 2;
  int64_t dim = 0;
  int64_t precision = 0;
  std::vector<int64_t> pivots;
  int64_t wdim = 0;
  bool certificate_ok = false;
};

GapData gap_data(const SpaceBasis& basis);
/// precision 0 selects msengine::certificate_precision(N, k).
GapData gap_data(int64_t n, int64_t k, int64_t precision = 0, const msengine::BuildOptions& opts = {});
nlohmann::json to_json(const GapData& g);

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json witness;
};

/// {triple, dims, pivots, wdim, bounds, checks: [{name, pass, witness}]}.
struct Report {
  std::string kind;
  nlohmann::json triple = nlohmann::json::object();
  nlohmann::json dims = nlohmann::json::object();
  nlohmann::json pivots = nlohmann::json::object();
  nlohmann::json wdim = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::vector<Report> parts;

  void add(std::string name, bool pass, nlohmann::json witness = nullptr);
  bool pass() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  msengine::BuildOptions build;
  /// 0 selects the certificate precision of the largest space involved.
  int64_t precision = 0;
};

/// The ord bound on a basis of S = ker(W_p + p^{1-k/2} U_p): each vector is
/// made p-integral and primitive, the valuation hypothesis on f|W_p is
/// checked, and ord is compared with the bound and with dim S_k(pN). Also
/// records the operator identities and S ∩ W_k(pN) = {0}.
Report verify_theorem(int64_t n, int64_t k, int64_t p, const VerifyOptions& opts = {});
/// dim W_k(pN) <= dim S_k(N), with a sharpness flag.
Report verify_cor_subspace(int64_t n, int64_t k, int64_t p, const VerifyOptions& opts = {});
/// S_k(N) = 0 implies W_k(pN) = 0. Throws std::invalid_argument if
/// dim S_k(N) > 0.
Report verify_cor_analogue(int64_t n, int64_t k, int64_t p, const VerifyOptions& opts = {});
/// Weight 2, genus(N) = 0: infinity is not a Weierstrass point of X_0(pN).
/// Throws std::invalid_argument if genus(N) > 0.
Report verify_ogg(int64_t n, int64_t p, const VerifyOptions& opts = {});

/// The three worked triples (1,16,19), (2,12,23), (1,28,29). For the last,
/// the stated dim S_28(Gamma_0(1)) = 3 is compared with the formula value and
/// the discrepancy is flagged; the bound is checked against the formula.
Report verify_examples(const VerifyOptions& opts = {});

}  // namespace mfgap::gaps
