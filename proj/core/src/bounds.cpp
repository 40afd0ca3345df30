#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specbound/growth.hpp"
#include "specbound/hmap.hpp"
#include "specbound/models.hpp"
#include "specbound/spectra.hpp"

namespace specbound {

namespace {

constexpr double kSlackTol = 1e-8;
// Relative grace when validating an externally supplied exp-class gauge
// against the measured singular values.
constexpr double kGaugeGrace = 1e-12;

void check_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

BoundReport distance_report(const char* suite, int dim, double measured,
                            double bound) {
  BoundReport r;
  r.suite = suite;
  r.dim = dim;
  r.measured = measured;
  r.bound = bound;
  r.slack = bound - measured;
  r.status = relative_slack_status(measured, bound, kSlackTol);
  return r;
}

bool exactly_zero(const ComplexMatrix& m) { return m.isZero(0.0); }

}  // namespace

BoundReport elsner_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_pair(a, b, "elsner_bound");
  const int n = static_cast<int>(a.rows());
  const double norm_a = operator_norm(a);
  const double norm_b = operator_norm(b);
  const double dist = operator_norm(a - b);
  const double bound =
      std::pow(norm_a + norm_b, 1.0 - 1.0 / n) * std::pow(dist, 1.0 / n);
  const double measured = hausdorff(eigenvalues(a), eigenvalues(b));
  return distance_report("elsner", n, measured, bound);
}

BoundReport directed_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_pair(a, b, "directed_bound");
  const int n = static_cast<int>(a.rows());
  const double measured =
      directed_hausdorff(eigenvalues(b), adjoin_zero(eigenvalues(a)));
  const GrowthFunction f = GrowthFunction::from_matrix(a);
  if (f.degenerate()) {
    BoundReport r = distance_report("directed", n, measured, 0.0);
    r.status = Status::Warn;
    r.note = "A = 0: growth function is constant, transform undefined";
    return r;
  }
  const double bound = HEvaluator(f).h_eval(operator_norm(a - b));
  return distance_report("directed", n, measured, bound);
}

BoundReport main_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_pair(a, b, "main_bound");
  const int n = static_cast<int>(a.rows());
  const double measured =
      hausdorff(adjoin_zero(eigenvalues(a)), adjoin_zero(eigenvalues(b)));
  if (exactly_zero(a) && exactly_zero(b))
    return distance_report("main", n, measured, 0.0);
  const GrowthFunction f =
      combine_max(GrowthFunction::from_matrix(a), GrowthFunction::from_matrix(b));
  const double bound = HEvaluator(f).h_eval(operator_norm(a - b));
  return distance_report("main", n, measured, bound);
}

BoundReport corollary_bound(CorollaryKind kind, const ComplexMatrix& a,
                            const ComplexMatrix& b,
                            const CorollaryParams& params) {
  check_pair(a, b, "corollary_bound");
  const int n = static_cast<int>(a.rows());
  const double measured =
      hausdorff(adjoin_zero(eigenvalues(a)), adjoin_zero(eigenvalues(b)));
  const double dist = operator_norm(a - b);

  const char* suite = "";
  switch (kind) {
    case CorollaryKind::TraceNorm:
      suite = "trace_norm";
      break;
    case CorollaryKind::ExpClass:
      suite = "exp_class";
      break;
    case CorollaryKind::FiniteRank:
      suite = "finite_rank";
      break;
    case CorollaryKind::TwoSingular:
      suite = "two_singular";
      break;
  }

  if (exactly_zero(a) && exactly_zero(b))
    return distance_report(suite, n, measured, 0.0);

  double bound = 0.0;
  switch (kind) {
    case CorollaryKind::TraceNorm: {
      // F(r) = exp(m r) with m the larger trace norm; pull m out via the
      // scaling identity H_{F(m.)}(t) = m H_F(t/m).
      const double m = std::max(trace_norm(a), trace_norm(b));
      bound = m * HEvaluator(GrowthFunction::exponential()).h_eval(dist / m);
      break;
    }
    case CorollaryKind::ExpClass: {
      const double pa = params.a;
      const double palpha = params.alpha;
      const double gauge_a = gauge(a, pa, palpha);
      const double gauge_b = gauge(b, pa, palpha);
      double m = std::max(gauge_a, gauge_b);
      if (params.gauge_bound) {
        if (*params.gauge_bound < m * (1.0 - kGaugeGrace))
          throw std::invalid_argument(
              "corollary_bound: supplied gauge does not dominate the "
              "singular values");
        m = *params.gauge_bound;
      }
      bound =
          m * HEvaluator(GrowthFunction::exp_class(pa, palpha)).h_eval(dist / m);
      break;
    }
    case CorollaryKind::FiniteRank: {
      const double m = std::max(operator_norm(a), operator_norm(b));
      bound =
          m * HEvaluator(GrowthFunction::power_one_plus(n)).h_eval(dist / m);
      break;
    }
    case CorollaryKind::TwoSingular: {
      const SingularProfile pa = singular_values(a);
      const SingularProfile pb = singular_values(b);
      const double s1 = std::max(pa.largest(), pb.largest());
      const double s2 =
          n > 1 ? std::max(pa.values()[1], pb.values()[1]) : 0.0;
      bound = HEvaluator(GrowthFunction::two_singular(s1, s2, n)).h_eval(dist);
      break;
    }
  }
  return distance_report(suite, n, measured, bound);
}

double reference_asymptote(AsymptoteKind kind, const AsymptoteParams& p) {
  const auto need_n = [&] {
    if (p.n < 1) throw std::invalid_argument("reference_asymptote: n must be >= 1");
  };
  const auto need_decay = [&] {
    if (!(p.a > 0.0) || !(p.alpha > 0.0))
      throw std::invalid_argument("reference_asymptote: a, alpha must be positive");
  };
  switch (kind) {
    case AsymptoteKind::PowerExponent:
    case AsymptoteKind::TwoSingularExponent:
      need_n();
      return 1.0 / (2.0 * p.n + 1.0);
    case AsymptoteKind::TwoSingularConstant: {
      need_n();
      if (!(p.s1 > 0.0) || !(p.s2 > 0.0))
        throw std::invalid_argument("reference_asymptote: s1, s2 must be positive");
      const double q = 2.0 * p.n + 1.0;
      return std::pow(p.s1, 2.0 / q) * std::pow(p.s2, (2.0 * p.n - 2.0) / q);
    }
    case AsymptoteKind::ExpClassHConstant: {
      need_decay();
      // Magnitude of the leading coefficient of -|log t|^{alpha/(1+alpha)}.
      const double expo = 1.0 / (1.0 + p.alpha);
      return std::pow(2.0 * p.a, expo) *
             std::pow((1.0 + p.alpha) / p.alpha, p.alpha * expo);
    }
    case AsymptoteKind::ExpClassGrowthConstant:
      need_decay();
      return std::pow(p.a, 1.0 / p.alpha) * p.alpha / (1.0 + p.alpha);
    case AsymptoteKind::ShiftElsnerExponent:
      need_n();
      return 1.0 / p.n;
    case AsymptoteKind::ShiftDistanceExponent:
      need_n();
      return (p.n - 1.0) / p.n;
    case AsymptoteKind::ShiftCoupledExponent:
      need_n();
      return (2.0 * p.n - 1.0) / (2.0 * p.n + 1.0);
    case AsymptoteKind::ShiftBalanceExponent:
      return 1.0 / 3.0;
  }
  throw std::invalid_argument("reference_asymptote: unknown kind");
}

}  // namespace specbound
