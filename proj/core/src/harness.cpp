#include "specbound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/detbounds.hpp"
#include "specbound/growth.hpp"
#include "specbound/hmap.hpp"
#include "specbound/spectra.hpp"

namespace specbound::harness {

namespace {

// Pinned tolerances. These grade fixed mathematical statements, so they are
// constants of the artifact rather than configuration.
constexpr double kWeylRelTol = 1e-9;        // sv-majorization slack, relative
constexpr double kWeylProductRelTol = 1e-8; // full-product equality, relative
constexpr double kShiftClosedFormRelTol = 1e-6;
constexpr double kShiftSlopeTol = 1e-6;      // |slope - (n-1)/n|, absolute
constexpr double kElsnerSlopeRelTol = 0.02;  // 2% of 1/n
constexpr double kPowerSlopeAbsTol = 0.02;   // percentage points, pinned window
constexpr double kPowerSlopeDeepRelTol = 0.02;
constexpr double kTwoSingularConstRelTol = 0.05;
constexpr double kTruncMonotoneGrace = 1e-14;
constexpr double kTruncFinalTol = 1e-10;
// Salt for the per-trial phase stream that places resolvent sample points;
// any fixed odd constant distinct from the matrix stream works.
constexpr std::uint64_t kPhaseSalt = 0x5851f42d4c957f2dULL;

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return sxy / sxx;
}

std::vector<double> log10_grid(double lo_exp, double hi_exp, int count) {
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(std::pow(
        10.0, lo_exp + (hi_exp - lo_exp) * i / static_cast<double>(count - 1)));
  return out;
}

BoundReport make_row(const char* suite, std::string case_id, int dim,
                     std::uint64_t seed, double param, double measured,
                     double bound, Status status, std::string note = "") {
  BoundReport r;
  r.suite = suite;
  r.case_id = std::move(case_id);
  r.dim = dim;
  r.seed = seed;
  r.param = param;
  r.measured = measured;
  r.bound = bound;
  r.slack = bound - measured;
  r.status = status;
  r.note = std::move(note);
  return r;
}

// ---------------------------------------------------------------------------
// Singular-value majorization rows for one matrix: the three partial-product/
// partial-sum families plus the full-product equality. Each family is
// condensed to its worst prefix length m, so one row certifies all n
// prefixes.

void append_weyl_rows(std::vector<BoundReport>& rows, const ComplexMatrix& m,
                      const std::string& label) {
  const int n = static_cast<int>(m.rows());
  const SpectrumSet spec = eigenvalues(m);
  const SingularProfile prof = singular_values(m);
  const std::vector<double>& s = prof.values();

  std::vector<double> mods(n);
  for (int k = 0; k < n; ++k) mods[k] = std::abs(spec.points[k]);

  // Multiplicative: prod |lambda| <= prod s for every prefix.
  {
    double lp = 1.0, sp = 1.0;
    double worst_lp = 1.0, worst_sp = 1.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      lp *= mods[k];
      sp *= s[k];
      const double margin = sp * (1.0 + kWeylRelTol) - lp;
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_lp = lp;
        worst_sp = sp;
      }
    }
    rows.push_back(make_row(
        "weyl_mult", label + "/m", n, 0, 0.0, worst_lp, worst_sp,
        worst_lp <= worst_sp * (1.0 + kWeylRelTol) ? Status::Pass : Status::Fail));
  }

  // Additive: sum |lambda| <= sum s for every prefix (tolerance scaled by
  // the trace norm).
  {
    const double scale = prof.sum();
    double ls = 0.0, ss = 0.0;
    double worst_ls = 0.0, worst_ss = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      ls += mods[k];
      ss += s[k];
      const double margin = ss - ls;
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_ls = ls;
        worst_ss = ss;
      }
    }
    rows.push_back(make_row(
        "weyl_add", label + "/a", n, 0, 0.0, worst_ls, worst_ss,
        worst_ls <= worst_ss + kWeylRelTol * scale ? Status::Pass : Status::Fail));
  }

  // Shifted products: prod (1 + r|lambda|) <= prod (1 + r s), sampled r.
  const double r_samples[] = {0.1, 1.0, 10.0};
  for (int ri = 0; ri < 3; ++ri) {
    const double r = r_samples[ri];
    double llog = 0.0, slog = 0.0;
    double worst_llog = 0.0, worst_slog = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      llog += std::log1p(r * mods[k]);
      slog += std::log1p(r * s[k]);
      const double margin = slog - llog;
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_llog = llog;
        worst_slog = slog;
      }
    }
    rows.push_back(make_row(
        "weyl_one_plus", label + "/p" + std::to_string(ri), n, 0, r,
        std::exp(worst_llog), std::exp(worst_slog),
        worst_llog <= worst_slog + std::log1p(kWeylRelTol) ? Status::Pass
                                                           : Status::Fail));
  }

  // Full product: |prod lambda| agrees with prod s (both equal |det|).
  {
    double lp = 1.0, sp = 1.0;
    for (int k = 0; k < n; ++k) {
      lp *= mods[k];
      sp *= s[k];
    }
    const double scale = std::max(sp, std::numeric_limits<double>::min());
    rows.push_back(make_row(
        "weyl_det_product", label + "/q", n, 0, 0.0, lp, sp,
        std::abs(sp - lp) <= kWeylProductRelTol * scale ? Status::Pass
                                                        : Status::Fail));
  }
}

// ---------------------------------------------------------------------------
// One complete verify trial: a random pair plus every determinant and
// distance check the library exposes.

struct TrialKey {
  int dim = 0;
  int delta_index = 0;
  double delta = 0.0;
  int trial = 0;
  std::uint64_t stream_seed = 0;
  std::string prefix;
};

std::vector<BoundReport> verify_trial_rows(const Config& cfg,
                                           const TrialKey& key) {
  std::vector<BoundReport> rows;
  rows.reserve(40);
  const auto [a, b] = random_pair(key.dim, key.stream_seed, key.delta);

  append_weyl_rows(rows, a, key.prefix + "/A");
  append_weyl_rows(rows, b, key.prefix + "/B");

  // Resolvent lower bound sampled on the circle |z| = 2 ||A||, where the
  // spectral distance is at least ||A|| and the check is well posed.
  const double norm_a = operator_norm(a);
  if (norm_a > 0.0) {
    SplitMix64 phase_rng(key.stream_seed ^ kPhaseSalt);
    const double phase = phase_rng.uniform01();
    for (int j = 0; j < 3; ++j) {
      const double theta = 2.0 * std::numbers::pi * (j + phase) / 3.0;
      const Complex z = std::polar(2.0 * norm_a, theta);
      BoundReport row = lower_bound_check(a, z);
      row.case_id = key.prefix + "/z" + std::to_string(j);
      rows.push_back(std::move(row));
    }
  }

  for (BoundReport& row : upper_bound_check(a, b)) {
    row.case_id = key.prefix + "/" + row.case_id;
    rows.push_back(std::move(row));
  }

  rows.push_back(elsner_bound(a, b));
  rows.push_back(directed_bound(a, b));
  rows.push_back(main_bound(a, b));
  rows.push_back(corollary_bound(CorollaryKind::TraceNorm, a, b));
  {
    CorollaryParams params;
    params.a = cfg.exp_class.a;
    params.alpha = cfg.exp_class.alpha;
    rows.push_back(corollary_bound(CorollaryKind::ExpClass, a, b, params));
  }
  rows.push_back(corollary_bound(CorollaryKind::FiniteRank, a, b));
  rows.push_back(corollary_bound(CorollaryKind::TwoSingular, a, b));

  for (BoundReport& row : rows) {
    if (row.case_id.empty()) row.case_id = key.prefix;
    row.seed = key.stream_seed;
    if (row.param == 0.0) row.param = key.delta;
  }
  return rows;
}

void apply_injection(std::vector<BoundReport>& rows) {
  // Self-test hook: a harness that actually grades its rows must notice the
  // bounds being halved. Warn rows are informational and stay untouched.
  for (BoundReport& row : rows) {
    if (row.status == Status::Warn) continue;
    row.bound *= 0.5;
    row.slack = row.bound - row.measured;
    row.status = row.slack >= -1e-8 * std::max(1.0, std::abs(row.bound))
                     ? Status::Pass
                     : Status::Fail;
  }
}

}  // namespace

std::size_t SuiteResult::passes() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const BoundReport& r) { return r.status == Status::Pass; }));
}

std::size_t SuiteResult::fails() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const BoundReport& r) { return r.status == Status::Fail; }));
}

std::size_t SuiteResult::warns() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const BoundReport& r) { return r.status == Status::Warn; }));
}

bool SuiteResult::all_passed() const { return fails() == 0; }

SuiteResult run_verify(const Config& config, const VerifyOptions& opts) {
  config.validate();
  if (opts.threads < 1)
    throw ConfigError("config: thread count must be >= 1");

  // Index the full work list up front; the stream seed depends only on the
  // global trial index, so results are independent of scheduling.
  std::vector<TrialKey> keys;
  keys.reserve(config.dims.size() * config.delta_grid.size() *
               static_cast<std::size_t>(std::max(config.trials, 0)));
  std::uint64_t global = 0;
  for (std::size_t di = 0; di < config.dims.size(); ++di) {
    for (std::size_t gi = 0; gi < config.delta_grid.size(); ++gi) {
      for (int t = 0; t < config.trials; ++t) {
        TrialKey key;
        key.dim = config.dims[di];
        key.delta_index = static_cast<int>(gi);
        key.delta = config.delta_grid[gi];
        key.trial = t;
        key.stream_seed = config.seed ^ global;
        char buf[32];
        std::snprintf(buf, sizeof buf, "d%02d/g%d/t%05d", key.dim,
                      key.delta_index, t);
        key.prefix = buf;
        keys.push_back(std::move(key));
        ++global;
      }
    }
  }

  std::vector<std::vector<BoundReport>> slots(keys.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= keys.size()) return;
      try {
        slots[i] = verify_trial_rows(config, keys[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const std::size_t thread_count = std::min<std::size_t>(
      static_cast<std::size_t>(opts.threads), std::max<std::size_t>(keys.size(), 1));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SuiteResult result;
  for (std::vector<BoundReport>& slot : slots)
    for (BoundReport& row : slot) result.rows.push_back(std::move(row));
  if (opts.inject_violation) apply_injection(result.rows);
  return result;
}

SuiteResult run_shift(const Config& config) {
  config.validate();
  SuiteResult result;
  const int n = config.n_shift;
  const std::uint64_t seed = config.seed;

  std::vector<double> log_eps, log_meas, log_elsner, log_two_singular;
  for (std::size_t i = 0; i < config.epsilon_grid.size(); ++i) {
    const double eps = config.epsilon_grid[i];
    const auto [a, b] = weighted_shift_pair(n, eps);
    const std::string tag = "eps" + std::to_string(i);

    const double measured =
        hausdorff(adjoin_zero(eigenvalues(a)), adjoin_zero(eigenvalues(b)));
    const double closed = std::pow(eps, (n - 1.0) / n);
    result.rows.push_back(make_row(
        "shift_hdist", tag, n, seed, eps, measured, closed,
        std::abs(measured - closed) <= kShiftClosedFormRelTol * closed
            ? Status::Pass
            : Status::Fail,
        "closed form eps^((n-1)/n)"));

    BoundReport elsner = elsner_bound(a, b);
    elsner.suite = "shift_elsner";
    elsner.case_id = tag;
    elsner.seed = seed;
    elsner.param = eps;
    log_elsner.push_back(std::log(elsner.bound));
    result.rows.push_back(std::move(elsner));

    BoundReport main_row = main_bound(a, b);
    main_row.suite = "shift_main";
    main_row.case_id = tag;
    main_row.seed = seed;
    main_row.param = eps;
    result.rows.push_back(std::move(main_row));

    BoundReport ts = corollary_bound(CorollaryKind::TwoSingular, a, b);
    ts.suite = "shift_two_singular";
    ts.case_id = tag;
    ts.seed = seed;
    ts.param = eps;
    log_two_singular.push_back(std::log(ts.bound));
    result.rows.push_back(std::move(ts));

    log_eps.push_back(std::log(eps));
    log_meas.push_back(std::log(measured));
  }

  if (log_eps.size() >= 2) {
    const double slope_meas = fit_slope(log_eps, log_meas);
    const double target_meas = (n - 1.0) / n;
    result.rows.push_back(make_row(
        "shift_slope_hdist", "fit", n, seed, 0.0, slope_meas, target_meas,
        std::abs(slope_meas - target_meas) <= kShiftSlopeTol ? Status::Pass
                                                             : Status::Fail));

    const double slope_elsner = fit_slope(log_eps, log_elsner);
    const double target_elsner = reference_asymptote(
        AsymptoteKind::ShiftElsnerExponent, {.n = n});
    result.rows.push_back(make_row(
        "shift_slope_elsner", "fit", n, seed, 0.0, slope_elsner, target_elsner,
        std::abs(slope_elsner - target_elsner) <=
                kElsnerSlopeRelTol * target_elsner
            ? Status::Pass
            : Status::Fail));

    // The two-singular bound couples both small parameters to eps; the
    // predicted exponent is an open comparison, so both candidate laws are
    // reported side by side without gating.
    const double slope_ts = fit_slope(log_eps, log_two_singular);
    result.rows.push_back(make_row(
        "shift_coupled_vs_paper", "fit", n, seed, 0.0, slope_ts,
        reference_asymptote(AsymptoteKind::ShiftCoupledExponent, {.n = n}),
        Status::Warn, "reference: (2n-1)/(2n+1)"));
    result.rows.push_back(make_row(
        "shift_coupled_vs_balance", "fit", n, seed, 0.0, slope_ts,
        reference_asymptote(AsymptoteKind::ShiftBalanceExponent, {.n = n}),
        Status::Warn, "reference: 1/3 from r(1+r)^2 = 1/eps"));
  }
  return result;
}

SuiteResult run_asymptote(const Config& config) {
  config.validate();
  SuiteResult result;
  const std::uint64_t seed = config.seed;

  const std::vector<double> shallow = log10_grid(-12.0, -8.0, 33);
  const std::vector<double> deep = log10_grid(-60.0, -40.0, 41);
  const std::vector<double> const_window = log10_grid(-40.0, -30.0, 41);

  const auto slope_of = [](const HEvaluator& h, const std::vector<double>& ts) {
    std::vector<double> xs, ys;
    xs.reserve(ts.size());
    ys.reserve(ts.size());
    for (double t : ts) {
      xs.push_back(std::log(t));
      ys.push_back(std::log(h.h_eval(t)));
    }
    return fit_slope(xs, ys);
  };

  for (int n : {1, 3, 5}) {
    const HEvaluator h(GrowthFunction::power_one_plus(n));
    const double target =
        reference_asymptote(AsymptoteKind::PowerExponent, {.n = n});
    const double slope = slope_of(h, shallow);
    result.rows.push_back(make_row(
        "asym_power_slope", "n" + std::to_string(n), n, seed, n, slope, target,
        std::abs(slope - target) <= kPowerSlopeAbsTol ? Status::Pass
                                                      : Status::Fail,
        "window t in [1e-12, 1e-8]"));
    const double slope_deep = slope_of(h, deep);
    result.rows.push_back(make_row(
        "asym_power_slope_deep", "n" + std::to_string(n), n, seed, n,
        slope_deep, target,
        std::abs(slope_deep - target) <= kPowerSlopeDeepRelTol * target
            ? Status::Pass
            : Status::Fail,
        "window t in [1e-60, 1e-40]"));
  }

  {
    const int n = 5;
    const double s1 = 2.0, s2 = 0.5;
    const HEvaluator h(GrowthFunction::two_singular(s1, s2, n));
    const double target =
        reference_asymptote(AsymptoteKind::TwoSingularExponent, {.n = n});
    const double slope = slope_of(h, shallow);
    result.rows.push_back(make_row(
        "asym_two_singular_slope", "n5", n, seed, s1, slope, target,
        std::abs(slope - target) <= kPowerSlopeAbsTol ? Status::Pass
                                                      : Status::Fail,
        "s1=2, s2=0.5; window t in [1e-12, 1e-8]"));

    // Prefactor, extracted deep in the asymptotic regime with the exponent
    // pinned to its theoretical value.
    const double expo = 1.0 / (2.0 * n + 1.0);
    double acc = 0.0;
    for (double t : const_window)
      acc += std::log(h.h_eval(t)) - expo * std::log(t);
    const double c_meas = std::exp(acc / static_cast<double>(const_window.size()));
    const double c_ref = reference_asymptote(
        AsymptoteKind::TwoSingularConstant, {.n = n, .s1 = s1, .s2 = s2});
    result.rows.push_back(make_row(
        "asym_two_singular_const", "n5", n, seed, s2, c_meas, c_ref,
        std::abs(c_meas - c_ref) <= kTwoSingularConstRelTol * c_ref
            ? Status::Pass
            : Status::Fail,
        "window t in [1e-40, 1e-30]"));
  }

  {
    const double a = config.exp_class.a;
    const double alpha = config.exp_class.alpha;
    const HEvaluator h(GrowthFunction::exp_class(a, alpha));
    const double gamma = alpha / (1.0 + alpha);
    const double c_ref =
        reference_asymptote(AsymptoteKind::ExpClassHConstant, {.a = a, .alpha = alpha});

    const double ts[] = {1e-20, 1e-40, 1e-80};
    double log_h[3], ratio[3];
    bool all_finite = true;
    for (int i = 0; i < 3; ++i) {
      log_h[i] = std::log(h.h_eval(ts[i]));
      ratio[i] = -log_h[i] / std::pow(std::abs(std::log(ts[i])), gamma);
      if (!std::isfinite(log_h[i])) all_finite = false;
      result.rows.push_back(make_row(
          "asym_expclass_ratio", "t" + std::to_string(i), 0, seed, ts[i],
          ratio[i], c_ref, Status::Warn,
          "-log H / |log t|^(alpha/(1+alpha)) vs predicted constant"));
    }
    result.rows.push_back(make_row(
        "asym_expclass_finite", "all", 0, seed, 0.0, all_finite ? 1.0 : 0.0,
        1.0, all_finite ? Status::Pass : Status::Fail,
        "log H finite at t in {1e-20, 1e-40, 1e-80}"));
    const double mono_violation =
        std::max(log_h[1] - log_h[0], log_h[2] - log_h[1]);
    result.rows.push_back(make_row(
        "asym_expclass_monotone", "all", 0, seed, 0.0, mono_violation, 0.0,
        mono_violation < 0.0 ? Status::Pass : Status::Fail,
        "log H strictly decreasing as t -> 0"));
    const double trend_violation =
        std::max(ratio[0] - ratio[1], ratio[1] - ratio[2]);
    result.rows.push_back(make_row(
        "asym_expclass_ratio_trend", "all", 0, seed, 0.0, trend_violation, 0.0,
        trend_violation <= 0.0 ? Status::Pass : Status::Fail,
        "normalized ratio nondecreasing toward the limit"));

    // Growth side: log F against the predicted power of log r.
    const double g_ref = reference_asymptote(
        AsymptoteKind::ExpClassGrowthConstant, {.a = a, .alpha = alpha});
    const double log_rs[] = {20.0 * std::log(10.0), 40.0 * std::log(10.0),
                             80.0 * std::log(10.0)};
    const GrowthFunction f = GrowthFunction::exp_class(a, alpha);
    for (int i = 0; i < 3; ++i) {
      const double g =
          f.log_eval(log_rs[i]) / std::pow(log_rs[i], 1.0 + 1.0 / alpha);
      result.rows.push_back(make_row(
          "asym_expclass_growth", "r" + std::to_string(i), 0, seed,
          std::exp(log_rs[i]), g, g_ref, Status::Warn,
          "log F / (log r)^(1+1/alpha) vs predicted constant"));
    }
  }
  return result;
}

SuiteResult run_truncation(const Config& config) {
  config.validate();
  SuiteResult result;
  const int n = 40;
  const std::uint64_t seed = 7;
  const ComplexMatrix a = exp_class_matrix(config.exp_class, n, seed);
  const Complex z(2.0 * operator_norm(a), 0.0);
  const std::vector<int> ranks = {5, 10, 20, 40};
  const std::vector<TruncationRow> table = truncation_study(a, z, ranks);

  const auto emit = [&](const char* suite, auto getter) {
    double prev = std::numeric_limits<double>::infinity();
    double worst_step = -std::numeric_limits<double>::infinity();
    for (const TruncationRow& row : table) {
      const double gap = getter(row);
      result.rows.push_back(make_row(
          suite, "k" + std::to_string(row.rank), n, seed,
          static_cast<double>(row.rank), gap, gap, Status::Pass));
      if (prev != std::numeric_limits<double>::infinity())
        worst_step = std::max(worst_step, gap - prev);
      prev = gap;
    }
    result.rows.push_back(make_row(
        (std::string(suite) + "_monotone").c_str(), "all", n, seed, 0.0,
        worst_step, 0.0,
        worst_step <= kTruncMonotoneGrace ? Status::Pass : Status::Fail,
        "gaps nonincreasing in rank"));
    result.rows.push_back(make_row(
        (std::string(suite) + "_final").c_str(),
        "k" + std::to_string(table.back().rank), n, seed,
        static_cast<double>(table.back().rank), getter(table.back()),
        kTruncFinalTol,
        getter(table.back()) <= kTruncFinalTol ? Status::Pass : Status::Fail,
        "full-rank truncation reproduces the matrix"));
  };

  emit("trunc_trace_gap", [](const TruncationRow& r) { return r.trace_norm_gap; });
  emit("trunc_det_gap", [](const TruncationRow& r) { return r.det_gap; });
  emit("trunc_dist_gap", [](const TruncationRow& r) { return r.dist_gap; });
  return result;
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report_csv(std::ostream& os, const std::vector<BoundReport>& rows) {
  os << "suite,case_id,dim,seed,param,measured,bound,slack,status\n";
  for (const BoundReport& r : rows) {
    os << r.suite << ',' << r.case_id << ',' << r.dim << ',' << r.seed << ','
       << format_float(r.param) << ',' << format_float(r.measured) << ','
       << format_float(r.bound) << ',' << format_float(r.slack) << ','
       << to_string(r.status) << '\n';
  }
}

void write_report_json(std::ostream& os, const std::vector<BoundReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundReport& r : rows) {
    nlohmann::json obj;
    obj["suite"] = r.suite;
    obj["case_id"] = r.case_id;
    obj["dim"] = r.dim;
    obj["seed"] = r.seed;
    obj["param"] = r.param;
    obj["measured"] = r.measured;
    obj["bound"] = r.bound;
    obj["slack"] = r.slack;
    obj["status"] = std::string(to_string(r.status));
    if (!r.note.empty()) obj["note"] = r.note;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_summary_json(std::ostream& os, std::string_view command,
                        const SuiteResult& result, int exit_code) {
  nlohmann::json obj;
  obj["command"] = std::string(command);
  obj["rows"] = result.rows.size();
  obj["pass"] = result.passes();
  obj["fail"] = result.fails();
  obj["warn"] = result.warns();
  obj["exit_code"] = exit_code;
  os << obj.dump(2) << '\n';
}

}  // namespace specbound::harness
