#include "mfgap/invariants.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "mfgap/arith.h"

namespace mfgap {

Level::Level(int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1, got " + std::to_string(n));
}

Weight::Weight(int64_t k) : k_(k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("weight must be even and >= 2, got " + std::to_string(k));
}

namespace invariants {

int64_t index(Level n) {
  int64_t r = n.value();
  for (int64_t p : prime_divisors(n.value())) r = r / p * (p + 1);
  return r;
}

int64_t eps2(Level n) {
  if (n.value() % 4 == 0) return 0;
  int64_t r = 1;
  for (int64_t p : prime_divisors(n.value())) r *= 1 + kronecker(-4, p);
  return r;
}

int64_t eps3(Level n) {
  if (n.value() % 9 == 0) return 0;
  int64_t r = 1;
  for (int64_t p : prime_divisors(n.value())) r *= 1 + kronecker(-3, p);
  return r;
}

int64_t eps_inf(Level n) {
  int64_t r = 0;
  for (int64_t d : divisors(n.value())) r += euler_phi(gcd(d, n.value() / d));
  return r;
}

int64_t genus(Level n) {
  // 12 g = I - 6 eps_inf - 3 eps2 - 4 eps3 + 12
  int64_t twelve_g = index(n) - 6 * eps_inf(n) - 3 * eps2(n) - 4 * eps3(n) + 12;
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw std::logic_error("genus formula produced a non-integral or negative value at N=" +
                           std::to_string(n.value()));
  return twelve_g / 12;
}

LevelInvariants level_invariants(Level n) {
  LevelInvariants li;
  li.level = n.value();
  li.index = index(n);
  li.eps2 = eps2(n);
  li.eps3 = eps3(n);
  li.eps_inf = eps_inf(n);
  li.genus = genus(n);
  return li;
}

int64_t dim_sk(Level n, Weight k) {
  const int64_t kk = k.value();
  const int64_t g = genus(n);
  if (kk == 2) return g;
  int64_t d = (kk - 1) * (g - 1) + (kk / 4) * eps2(n) + (kk / 3) * eps3(n) + (kk / 2 - 1) * eps_inf(n);
  if (d < 0) throw std::logic_error("dimension formula produced a negative value");
  return d;
}

AlphaPair alpha_pair(Level n, int64_t big_k) {
  if (big_k % 2 != 0) throw std::invalid_argument("alpha_pair: weight must be even");
  const int64_t e2 = eps2(n), e3 = eps3(n);
  switch (mod(big_k, 12)) {
    case 2: return {e2, 2 * e3};
    case 4: return {0, e3};
    case 6: return {e2, 0};
    case 8: return {0, 2 * e3};
    case 10: return {e2, e3};
    default: return {0, 0};
  }
}

int64_t valence_bound(Level n, Weight k) { return k.value() * index(n) / 12; }

int64_t sturm_bound(Level n, Weight k) { return valence_bound(n, k) + 1; }

void check_triple(Level n, Weight k, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n.value() % p == 0) throw std::invalid_argument("p must not divide N");
  if (p < std::max<int64_t>(5, k.value() + 1)) throw std::invalid_argument("p must be >= max(5, k+1)");
}

void check_prime_coprime(Level n, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n.value() % p == 0) throw std::invalid_argument("p must not divide N");
}

namespace {

mpq_class frac(int64_t num, int64_t den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class amr_ord_bound(Level n, Weight k, int64_t p) {
  check_prime_coprime(n, p);
  const int64_t big_k = (k.value() - 1) * p + 1;
  AlphaPair a = alpha_pair(n, big_k);
  mpq_class b = frac(big_k * index(n), 12);
  b -= frac(a.alpha2, 2);
  b -= frac(a.alpha3, 3);
  b -= eps_inf(n) - 1;
  return b;
}

mpq_class main_inequality_lhs(Level n, Weight k, int64_t p) {
  check_prime_coprime(n, p);
  const int64_t kk = k.value();
  const Level pn(p * n.value());
  AlphaPair a = alpha_pair(n, (kk - 1) * p + 1);
  mpq_class v = frac((kk - 2) * index(n), 12);
  v += (frac(kk / 4, 1) - frac(kk - 1, 4)) * eps2(pn);
  v += (frac(kk / 3, 1) - frac(kk - 1, 3)) * eps3(pn);
  v += frac(a.alpha2, 2) + frac(a.alpha3, 3);
  return v;
}

std::string to_string(ReducedForm f) {
  switch (f) {
    case ReducedForm::IndexOnly: return "index_only";
    case ReducedForm::IndexEps2: return "index_plus_eps2";
    case ReducedForm::IndexEps3: return "index_plus_eps3";
    case ReducedForm::IndexEps2Eps3: return "index_plus_eps2_eps3";
    case ReducedForm::Alpha2Only: return "alpha2_form";
    case ReducedForm::Alpha3Only: return "alpha3_form";
    case ReducedForm::Full: return "full";
  }
  return "?";
}

CaseReport classify_case(Level n, Weight k, int64_t p) {
  check_triple(n, k, p);
  const int64_t kk = k.value();
  CaseReport r;
  r.level = n.value();
  r.weight = kk;
  r.prime = p;
  r.big_k = (kk - 1) * p + 1;
  r.alpha = alpha_pair(n, r.big_k);
  r.alpha2_zero = r.alpha.alpha2 == 0;
  r.alpha3_zero = r.alpha.alpha3 == 0;
  const int64_t idx = index(n), e2 = eps2(n), e3 = eps3(n);
  const Level pn(p * n.value());
  r.eps2_zero = e2 == 0;
  r.eps3_zero = e3 == 0;
  r.big_k_class12 = static_cast<int>(mod(r.big_k, 12));
  r.lhs = main_inequality_lhs(n, k, p);

  auto set_class = [&](int m) {
    r.modulus = m;
    r.k_class = static_cast<int>(mod(kk, m));
    r.p_class = static_cast<int>(mod(p, m));
  };
  auto is = [&](int kc, int pc) { return r.k_class == kc && r.p_class == pc; };
  bool matched = true;

  if (r.alpha2_zero && r.alpha3_zero) {
    if (r.eps2_zero && r.eps3_zero) {
      set_class(12);
      r.form = ReducedForm::IndexOnly;
    } else if (!r.eps2_zero && r.eps3_zero) {
      set_class(4);
      if (is(0, 1)) r.form = ReducedForm::IndexEps2;
      else if (is(2, 3)) r.form = ReducedForm::IndexOnly;
      else matched = false;
    } else if (r.eps2_zero && !r.eps3_zero) {
      set_class(3);
      if (is(0, 1)) r.form = ReducedForm::IndexEps3;
      else if (is(2, 2)) r.form = ReducedForm::IndexOnly;
      else matched = false;
    } else {
      set_class(12);
      if (is(2, 11)) r.form = ReducedForm::IndexOnly;
      else if (is(6, 7)) r.form = ReducedForm::IndexEps3;
      else if (is(8, 5)) r.form = ReducedForm::IndexEps2;
      else if (is(0, 1)) r.form = ReducedForm::IndexEps2Eps3;
      else matched = false;
    }
  } else if (!r.alpha2_zero && r.alpha3_zero) {
    set_class(12);
    r.form = ReducedForm::Alpha2Only;
  } else if (r.alpha2_zero && !r.alpha3_zero) {
    set_class(12);
    r.form = ReducedForm::Alpha3Only;
  } else {
    set_class(12);
    r.form = is(2, 1) ? ReducedForm::IndexOnly : ReducedForm::Full;
  }

  const mpq_class base = frac((kk - 2) * idx, 12);
  const mpq_class c2 = frac(kk / 4, 1) - frac(kk - 1, 4);
  const mpq_class c3 = frac(kk / 3, 1) - frac(kk - 1, 3);
  switch (r.form) {
    case ReducedForm::IndexOnly: r.reduced_value = base; break;
    case ReducedForm::IndexEps2: r.reduced_value = base + frac(e2, 2); break;
    case ReducedForm::IndexEps3: r.reduced_value = base + frac(2 * e3, 3); break;
    case ReducedForm::IndexEps2Eps3: r.reduced_value = base + frac(e2, 2) + frac(2 * e3, 3); break;
    case ReducedForm::Alpha2Only:
      r.reduced_value = base + c2 * eps2(pn) + c3 * eps3(pn) + frac(r.alpha.alpha2, 2);
      break;
    case ReducedForm::Alpha3Only:
      r.reduced_value = base + c2 * eps2(pn) + c3 * eps3(pn) + frac(r.alpha.alpha3, 3);
      break;
    case ReducedForm::Full: r.reduced_value = r.lhs; break;
  }
  r.exact_reduction = r.reduced_value == r.lhs;
  if (!matched) {
    r.note = "no case of the analysis applies";
    r.certified = false;
  } else {
    r.certified = r.reduced_value >= 1 && r.reduced_value <= r.lhs;
  }
  return r;
}

std::vector<ScanRow> scan(const ScanRange& range, unsigned threads) {
  if (range.kmin < 4 || range.kmin % 2 != 0 || range.kmax < range.kmin || range.nmax < 1)
    throw std::invalid_argument("scan: invalid range");
  struct Triple {
    int64_t k, n, p;
  };
  std::vector<Triple> triples;
  const auto primes = primes_up_to(range.pmax);
  for (int64_t k = range.kmin; k <= range.kmax; k += 2)
    for (int64_t n = 1; n <= range.nmax; ++n)
      for (int64_t p : primes)
        if (p >= std::max<int64_t>(5, k + 1) && n % p != 0) triples.push_back({k, n, p});

  std::vector<ScanRow> rows(triples.size());
  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const auto& t = triples[i];
      ScanRow& row = rows[i];
      Level n(t.n);
      Weight k(t.k);
      row.report = classify_case(n, k, t.p);
      row.amr_bound = amr_ord_bound(n, k, t.p);
      row.dim_pn = dim_sk(Level(t.p * t.n), k);
      row.identity_holds = mpq_class(row.dim_pn) - row.amr_bound == row.report.lhs - 1;
      row.lhs_ok = row.report.lhs >= 1;
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || triples.size() < 2 * threads) {
    work(0, triples.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (triples.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      size_t b = t * chunk, e = std::min(triples.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::vector<int64_t> vanishing_levels(Weight k) {
  std::vector<int64_t> out;
  int64_t last_zero = 0;
  for (int64_t n = 1;; ++n) {
    if (dim_sk(Level(n), k) == 0) {
      out.push_back(n);
      last_zero = n;
    } else if (n - last_zero >= 20) {
      break;
    }
  }
  return out;
}

}  // namespace invariants
}  // namespace mfgap
