#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/models.hpp"
#include "specbound/report.hpp"

namespace specbound::harness {

struct ToleranceConfig {
  double slack = 1e-8;  // slack tolerance for inequality rows
  double rel = 1e-8;    // relative tolerance for equality-style rows
};

// Runtime configuration, loadable from a JSON object. Every field has the
// default shown; unknown keys are rejected rather than ignored so a typo in
// a config file cannot silently run the wrong experiment.
struct Config {
  std::uint64_t seed = 42;
  int trials = 1000;
  std::vector<int> dims = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> delta_grid = {1e-1, 1e-3};
  std::vector<double> epsilon_grid = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  int n_shift = 6;
  ExpClassParams exp_class;  // {a = 1, alpha = 1, m = 1}
  ToleranceConfig tol;

  // Throws ConfigError on violated constraints (see parse_config).
  void validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a JSON object with any subset of the keys
//   seed, trials, dims, delta_grid, epsilon_grid, n_shift,
//   exp_class {a, alpha, m}, tol {slack, rel}
// applying defaults for the rest. Unknown keys, wrong types and
// out-of-range values all throw ConfigError.
Config parse_config(const std::string& json_text);

// parse_config over the contents of a file.
Config load_config(const std::string& path);

// "a..b" (inclusive, a <= b) or a single integer; used by --dims.
std::vector<int> parse_dims_range(const std::string& text);

struct SuiteResult {
  std::vector<BoundReport> rows;

  std::size_t passes() const;
  std::size_t fails() const;
  std::size_t warns() const;
  bool all_passed() const;  // no Fail rows
};

struct VerifyOptions {
  int threads = 1;
  // Self-test hook: halves every bound after evaluation, which must flip at
  // least one row to Fail if the harness actually compares anything.
  bool inject_violation = false;
};

// Random-ensemble property run: for every (dim, delta, trial) triple draws a
// pair via random_pair with stream seed = config.seed XOR global trial index
// and emits determinant-bound rows, singular-value majorization rows, and
// the theorem/corollary distance rows. Output is byte-identical for any
// thread count: work items are indexed up front and merged in order.
SuiteResult run_verify(const Config& config, const VerifyOptions& opts = {});

// Weighted-shift study at n = config.n_shift over config.epsilon_grid:
// measured distances against the closed form eps^{(n-1)/n}, bound rows, and
// fitted log-log slopes against the reference exponents.
SuiteResult run_shift(const Config& config);

// Asymptotic-regime probes of the H transform: finite-rank slope checks on
// pinned t-grids, two-singular slope and prefactor, exp-class ratio rows
// (informational) and monotonicity assertions.
SuiteResult run_asymptote(const Config& config);

// Schmidt-truncation convergence of the determinant machinery on a 40x40
// exp-class matrix (config.exp_class, seed 7), ranks {5, 10, 20, 40}.
SuiteResult run_truncation(const Config& config);

// Fixed-schema CSV: header
//   suite,case_id,dim,seed,param,measured,bound,slack,status
// with floats at 17 significant digits (shortest round-trip superset).
void write_report_csv(std::ostream& os, const std::vector<BoundReport>& rows);

// Same rows as a JSON array of objects.
void write_report_json(std::ostream& os, const std::vector<BoundReport>& rows);

// Machine-readable run summary (row/pass/fail/warn counts, exit code).
void write_summary_json(std::ostream& os, std::string_view command,
                        const SuiteResult& result, int exit_code);

// %.17g rendering used by the CSV writer.
std::string format_float(double v);

}  // namespace specbound::harness
