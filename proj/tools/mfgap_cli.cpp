#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mfgap/cache.h"
#include "mfgap/gaps.h"
#include "mfgap/invariants.h"

using namespace mfgap;
using nlohmann::json;

namespace {

constexpr int kHeavyDim = 40;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int emit_report(const gaps::Report& r) {
  std::cout << r.to_json().dump(2) << '\n';
  return r.pass() ? 0 : 1;
}

json scan_row_json(const invariants::ScanRow& row) {
  const auto& c = row.report;
  return {{"k", c.weight},
          {"N", c.level},
          {"p", c.prime},
          {"K", c.big_k},
          {"alpha2", c.alpha.alpha2},
          {"alpha3", c.alpha.alpha3},
          {"modulus", c.modulus},
          {"k_class", c.k_class},
          {"p_class", c.p_class},
          {"form", invariants::to_string(c.form)},
          {"lhs", c.lhs.get_str()},
          {"reduced", c.reduced_value.get_str()},
          {"amr_bound", row.amr_bound.get_str()},
          {"dim_pN", row.dim_pn},
          {"identity", row.identity_holds},
          {"ok", row.ok()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gamma_0(N) invariants, cusp form bases and Weierstrass gap verification"};
  app.require_subcommand(1);
  unsigned threads = 1;
  bool extended = false;
  app.add_option("--threads", threads, "Worker threads for Hecke operators and scans")->check(CLI::PositiveNumber);
  app.add_flag("--extended", extended, "Allow the heavy operator verifications");

  int64_t n = 0, k = 0, p = 0, prec = 0;
  std::string cache_dir;

  auto* inv = app.add_subcommand("invariants", "Invariants of Gamma_0(N) as JSON");
  inv->add_option("N", n)->required();

  auto* dim = app.add_subcommand("dim", "dim S_k(Gamma_0(N))");
  dim->add_option("N", n)->required();
  dim->add_option("k", k)->required();

  invariants::ScanRange range;
  bool scan_json = false, scan_csv = false;
  auto* scan = app.add_subcommand("scan", "Check the main inequality on a range of triples");
  scan->add_option("--kmin", range.kmin);
  scan->add_option("--kmax", range.kmax);
  scan->add_option("--nmax", range.nmax);
  scan->add_option("--pmax", range.pmax);
  auto* fj = scan->add_flag("--json", scan_json, "One JSON object per triple");
  auto* fc = scan->add_flag("--csv", scan_csv, "One CSV line per triple");
  fj->excludes(fc);

  auto* basis = app.add_subcommand("basis", "Echelon q-expansion basis in cache-file format");
  basis->add_option("N", n)->required();
  basis->add_option("k", k)->required();
  basis->add_option("--prec", prec, "Precision B (default Sturm bound + 10)");
  basis->add_option("--cache", cache_dir, "Cache directory (MFCACHE overrides)");

  auto* gaps_cmd = app.add_subcommand("gaps", "Pivots and dim W_k(N) as JSON");
  gaps_cmd->add_option("N", n)->required();
  gaps_cmd->add_option("k", k)->required();
  gaps_cmd->add_option("--prec", prec, "Precision B (default 5 x Sturm bound)");

  auto* wdim = app.add_subcommand("wdim", "dim W_k(N)");
  wdim->add_option("N", n)->required();
  wdim->add_option("k", k)->required();
  wdim->add_option("--prec", prec, "Precision B (default 5 x Sturm bound)");

  auto* verify = app.add_subcommand("verify", "Mechanical verification reports");
  verify->require_subcommand(1);
  auto* v_thm = verify->add_subcommand("theorem", "ord bound on the subspace S");
  auto* v_sub = verify->add_subcommand("cor-subspace", "dim W_k(pN) <= dim S_k(N)");
  auto* v_ana = verify->add_subcommand("cor-analogue", "S_k(N) = 0 implies W_k(pN) = 0");
  for (auto* c : {v_thm, v_sub, v_ana}) {
    c->add_option("N", n)->required();
    c->add_option("k", k)->required();
    c->add_option("p", p)->required();
    c->add_option("--prec", prec, "Precision B (default 5 x Sturm bound of level pN)");
  }
  auto* v_ogg = verify->add_subcommand("ogg", "Weight 2, genus(N) = 0: infinity is not a Weierstrass point on X_0(pN)");
  v_ogg->add_option("N", n)->required();
  v_ogg->add_option("p", p)->required();
  auto* v_ex = verify->add_subcommand("examples", "The three worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  msengine::BuildOptions build{threads};
  gaps::VerifyOptions vopts{build, prec};
  try {
    if (*inv) {
      auto li = invariants::level_invariants(Level(n));
      std::cout << json{{"level", li.level},   {"index", li.index},     {"eps2", li.eps2},
                        {"eps3", li.eps3},     {"epsInf", li.eps_inf}, {"genus", li.genus}}
                       .dump(2)
                << '\n';
      return 0;
    }
    if (*dim) {
      std::cout << invariants::dim_sk(Level(n), Weight(k)) << '\n';
      return 0;
    }
    if (*scan) {
      if (range.kmin < 4 || range.kmax < range.kmin || range.kmax < 4 || range.nmax < 1 || range.pmax < 2)
        throw UsageError("scan needs 4 <= kmin <= kmax, nmax >= 1 and pmax >= 2");
      auto rows = invariants::scan(range, threads);
      size_t bad = 0;
      std::map<std::string, size_t> forms;
      if (scan_csv) std::cout << "k,N,p,K,alpha2,alpha3,form,lhs,reduced,amr_bound,dim_pN,identity,ok\n";
      for (const auto& row : rows) {
        if (!row.ok()) ++bad;
        ++forms[invariants::to_string(row.report.form)];
        if (scan_json) std::cout << scan_row_json(row).dump() << '\n';
        if (scan_csv) {
          const auto& c = row.report;
          std::cout << c.weight << ',' << c.level << ',' << c.prime << ',' << c.big_k << ',' << c.alpha.alpha2 << ','
                    << c.alpha.alpha3 << ',' << invariants::to_string(c.form) << ',' << c.lhs.get_str() << ','
                    << c.reduced_value.get_str() << ',' << row.amr_bound.get_str() << ',' << row.dim_pn << ','
                    << row.identity_holds << ',' << row.ok() << '\n';
        }
      }
      if (!scan_json && !scan_csv) {
        json summary = {{"triples", rows.size()}, {"violations", bad}, {"forms", forms}};
        std::cout << summary.dump(2) << '\n';
      } else {
        std::cerr << rows.size() << " triples, " << bad << " violations\n";
      }
      return bad == 0 ? 0 : 1;
    }
    if (*basis) {
      const int64_t b = prec > 0 ? prec : msengine::default_precision(n, k);
      bool hit = false;
      SpaceBasis sb = cache::load_or_build(n, k, b, cache::resolve_dir(cache_dir), build, &hit);
      std::cout << "MFBASIS v1 " << sb.level << ' ' << sb.weight << ' ' << sb.precision << ' ' << sb.dim() << '\n';
      for (const auto& row : sb.rows) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i].get_str();
        std::cout << '\n';
      }
      if (hit) std::cerr << "loaded from cache\n";
      return 0;
    }
    if (*gaps_cmd || *wdim) {
      auto g = gaps::gap_data(n, k, prec, build);
      if (*wdim)
        std::cout << g.wdim << '\n';
      else
        std::cout << gaps::to_json(g).dump(2) << '\n';
      return g.certificate_ok ? 0 : 1;
    }
    if (*v_thm) {
      Level lv(n);
      invariants::check_prime_coprime(lv, p);
      if (!extended && invariants::dim_sk(Level(p * n), Weight(k)) > kHeavyDim)
        throw UsageError("dim S_k(pN) > " + std::to_string(kHeavyDim) + ": rerun with --extended");
      return emit_report(gaps::verify_theorem(n, k, p, vopts));
    }
    if (*v_sub) return emit_report(gaps::verify_cor_subspace(n, k, p, vopts));
    if (*v_ana) return emit_report(gaps::verify_cor_analogue(n, k, p, vopts));
    if (*v_ogg) return emit_report(gaps::verify_ogg(n, p, vopts));
    if (*v_ex) return emit_report(gaps::verify_examples(vopts));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
