// specbound: command line driver for the spectral-distance bound harness.
//
//   specbound verify     random-ensemble property run (determinant bounds,
//                        singular-value majorization, distance theorems)
//   specbound shift      weighted-shift family study with slope fits
//   specbound asymptote  asymptotic-regime probes of the bound transform
//   specbound truncation finite-rank truncation convergence experiment
//
// Every command writes <out>/<command>_report.{csv|json} plus
// <out>/<command>_summary.json and prints a one-line summary. Exit codes:
// 0 all checks passed (warnings allowed), 1 at least one check failed,
// 2 configuration or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specbound/harness.hpp"

namespace {

namespace sbh = specbound::harness;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  int threads = 1;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> dims;
  bool inject_violation = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path,
                  "JSON config file (defaults apply when omitted)");
  cmd->add_option("--seed", opts.seed, "Override the base RNG seed");
  cmd->add_option("--trials", opts.trials, "Override trials per (dim, delta)");
  cmd->add_option("--dims", opts.dims, "Override dims as 'a..b' or a single n");
  cmd->add_option("--out", opts.out_dir, "Output directory (created if needed)");
  cmd->add_option("--format", opts.format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", opts.threads, "Worker threads for verify")
      ->check(CLI::PositiveNumber);
}

sbh::Config resolve_config(const CommonOptions& opts) {
  sbh::Config cfg;
  if (!opts.config_path.empty()) cfg = sbh::load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.trials) cfg.trials = *opts.trials;
  if (opts.dims) cfg.dims = sbh::parse_dims_range(*opts.dims);
  cfg.validate();
  return cfg;
}

int write_outputs(const std::string& command, const CommonOptions& opts,
                  const sbh::SuiteResult& result) {
  const int exit_code = result.all_passed() ? 0 : 1;

  namespace fs = std::filesystem;
  const fs::path out_dir(opts.out_dir);
  fs::create_directories(out_dir);

  const fs::path report_path =
      out_dir / (command + "_report." + (opts.format == "json" ? "json" : "csv"));
  {
    std::ofstream out(report_path);
    if (!out) throw sbh::ConfigError("cannot write " + report_path.string());
    if (opts.format == "json")
      sbh::write_report_json(out, result.rows);
    else
      sbh::write_report_csv(out, result.rows);
  }
  const fs::path summary_path = out_dir / (command + "_summary.json");
  {
    std::ofstream out(summary_path);
    if (!out) throw sbh::ConfigError("cannot write " + summary_path.string());
    sbh::write_summary_json(out, command, result, exit_code);
  }

  std::cout << command << ": " << result.rows.size() << " rows, "
            << result.passes() << " pass, " << result.fails() << " fail, "
            << result.warns() << " warn -> " << report_path.string() << '\n';
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit spectral-distance bounds: verification harness"};
  app.require_subcommand(1);

  CommonOptions opts;
  CLI::App* verify = app.add_subcommand("verify", "Random-ensemble property run");
  CLI::App* shift = app.add_subcommand("shift", "Weighted-shift family study");
  CLI::App* asymptote =
      app.add_subcommand("asymptote", "Asymptotic-regime probes");
  CLI::App* truncation =
      app.add_subcommand("truncation", "Truncation convergence experiment");
  for (CLI::App* cmd : {verify, shift, asymptote, truncation})
    add_common_options(cmd, opts);
  verify
      ->add_flag("--inject-violation", opts.inject_violation,
                 "Self-test: corrupt every bound and expect failures")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    const sbh::Config cfg = resolve_config(opts);
    if (verify->parsed()) {
      sbh::VerifyOptions vopts;
      vopts.threads = opts.threads;
      vopts.inject_violation = opts.inject_violation;
      return write_outputs("verify", opts, sbh::run_verify(cfg, vopts));
    }
    if (shift->parsed()) return write_outputs("shift", opts, sbh::run_shift(cfg));
    if (asymptote->parsed())
      return write_outputs("asymptote", opts, sbh::run_asymptote(cfg));
    return write_outputs("truncation", opts, sbh::run_truncation(cfg));
  } catch (const sbh::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
