#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "refdefect/io.hpp"
#include "refdefect/sweep.hpp"
#include "refdefect/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;  // mathematical mismatch or suite failure
constexpr int kExitUsage = 2;     // usage or config error

std::uint64_t env_default_seed() {
  const char* env = std::getenv("REFDEFECT_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (...) {
    std::cerr << "warning: ignoring non-numeric REFDEFECT_SEED\n";
    return 0;
  }
}

int cmd_defect(const std::string& config_path, const std::string& out_path) {
  using namespace refdefect;
  CaseConfig cfg = case_config_from_json(load_json_file(config_path), env_default_seed());
  std::vector<DefectReport> reports =
      evaluate_case(cfg.family, cfg.a, cfg.b, cfg.ks, cfg.with_primal, cfg.budget, cfg.seed);
  bool all_agree = true;
  std::cout << "case " << reports.front().case_id << "\n";
  for (const DefectReport& rep : reports) {
    std::cout << "  k=" << rep.k << "  dim_image=" << rep.dim_image
              << "  dim_refk=" << rep.dim_refk_exact << "  rd_formula=" << rep.rd_formula
              << "  rd_exact=" << rep.rd_exact;
    if (rep.primal_dim) std::cout << "  primal_dim=" << *rep.primal_dim;
    std::cout << "  agree=" << (rep.agree ? "yes" : "NO") << "\n";
    all_agree = all_agree && rep.agree;
  }
  if (!out_path.empty()) {
    nlohmann::json out = nlohmann::json::array();
    for (const DefectReport& rep : reports) out.push_back(report_to_json(rep));
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    f << out.dump(2) << "\n";
  }
  return all_agree ? kExitOk : kExitMismatch;
}

int cmd_sweep(const std::string& config_path, const std::string& csv_path,
              const std::string& md_path, std::optional<int> jobs_override) {
  using namespace refdefect;
  SweepConfig cfg = sweep_config_from_json(load_json_file(config_path), env_default_seed());
  if (jobs_override) cfg.jobs = std::max(1, *jobs_override);
  // Config is fully validated before any output file is opened.
  SweepResult result = run_sweep(cfg);
  {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return kExitUsage;
    }
    write_csv(csv, result.rows);
  }
  if (!md_path.empty()) {
    std::ofstream md(md_path);
    if (!md) {
      std::cerr << "error: cannot write " << md_path << "\n";
      return kExitUsage;
    }
    write_markdown(md, cfg, result);
  }
  std::cout << "cases=" << result.summary.case_count << " rows=" << result.summary.row_count
            << " mismatches=" << result.summary.mismatch_count
            << " max_defect=" << result.summary.max_defect << " elapsed=" << std::fixed
            << std::setprecision(2) << result.summary.elapsed_s << "s\n";
  return result.summary.mismatch_count == 0 ? kExitOk : kExitMismatch;
}

int cmd_verify(std::uint64_t seed, const std::string& suite) {
  using namespace refdefect;
  std::vector<SuiteResult> results;
  if (suite.empty()) {
    results = run_verify(seed);
  } else {
    try {
      results.push_back(run_verify_suite(suite, seed));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\nknown suites:";
      for (const std::string& name : verify_suite_names()) std::cerr << " " << name;
      std::cerr << "\n";
      return kExitUsage;
    }
  }
  bool all_ok = true;
  for (const SuiteResult& r : results) {
    std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << std::left << std::setw(18) << r.name
              << " " << r.passed << "/" << r.total;
    if (!r.note.empty()) std::cout << "  [" << r.note << "]";
    std::cout << "\n";
    for (const std::string& f : r.failures) std::cout << "      counterexample: " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_refk(const std::string& subspace_path, int k, int budget, std::uint64_t seed) {
  using namespace refdefect;
  Subspace s = subspace_from_json(load_json_file(subspace_path));
  Subspace superset = ref_k_primal_superset(s, k, budget, seed);
  std::cout << "input dim=" << s.dim() << " ambient=" << s.ambient_rows() << "x"
            << s.ambient_cols() << "\n";
  std::cout << "primal superset of the " << k << "-reflexive cover: dim=" << superset.dim()
            << " (upper bound; budget=" << budget << ", seed=" << seed << ")\n";
  for (const Mat& b : superset.basis()) std::cout << to_string(b) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact k-reflexivity defect toolkit for elementary operator images"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path, md_path, suite, subspace_path;
  int k = 1, budget = 300;
  std::optional<int> jobs;
  std::uint64_t seed = env_default_seed();

  CLI::App* defect = app.add_subcommand("defect", "single-case defect computation");
  defect->add_option("--config", config_path, "case config JSON")->required();
  defect->add_option("--out", out_path, "write per-k reports as JSON");

  CLI::App* sweep = app.add_subcommand("sweep", "Jordan spec sweep with cross-checking");
  sweep->add_option("--config", config_path, "sweep config JSON")->required();
  sweep->add_option("--csv", csv_path, "output CSV path")->required();
  sweep->add_option("--md", md_path, "optional Markdown summary path");
  sweep->add_option("--jobs", jobs, "parallel case evaluations");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant verification suites");
  verify->add_option("--seed", seed, "base seed (default REFDEFECT_SEED or 0)");
  verify->add_option("--suite", suite, "run a single named suite");

  CLI::App* refk = app.add_subcommand("refk", "primal cover superset of a stored subspace");
  refk->add_option("--subspace", subspace_path, "subspace JSON file")->required();
  refk->add_option("-k,--k", k, "number of agreement vectors")->required();
  refk->add_option("--budget", budget, "sampled subspaces");
  refk->add_option("--seed", seed, "sampling seed (default REFDEFECT_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(defect)) return cmd_defect(config_path, out_path);
    if (app.got_subcommand(sweep)) return cmd_sweep(config_path, csv_path, md_path, jobs);
    if (app.got_subcommand(verify)) return cmd_verify(seed, suite);
    if (app.got_subcommand(refk)) {
      if (k < 1 || budget < 1) {
        std::cerr << "error: k and budget must be >= 1\n";
        return kExitUsage;
      }
      return cmd_refk(subspace_path, k, budget, seed);
    }
  } catch (const refdefect::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
