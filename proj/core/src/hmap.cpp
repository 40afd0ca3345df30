#include "specbound/hmap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace specbound {

namespace {
// Beyond this the transform argument has left any physically meaningful
// range (e^{±1e4} spans every representable double many times over).
constexpr double kBracketLimit = 1e4;
}  // namespace

HEvaluator::HEvaluator(GrowthFunction f, double rel_tol, int max_iter)
    : f_(std::move(f)), rel_tol_(rel_tol), max_iter_(max_iter) {
  if (f_.degenerate())
    throw std::invalid_argument(
        "HEvaluator: growth function is constant, transform undefined");
  if (!(rel_tol > 0.0) || rel_tol > 1e-6)
    throw std::invalid_argument("HEvaluator: rel_tol must lie in (0, 1e-6]");
  if (max_iter < 1)
    throw std::invalid_argument("HEvaluator: max_iter must be positive");
}

double HEvaluator::log_tilde(double log_r) const {
  return log_r + 2.0 * f_.log_eval(log_r);
}

double HEvaluator::log_tilde_inverse(double log_y) const {
  if (!std::isfinite(log_y))
    throw std::invalid_argument("log_tilde_inverse: non-finite target");
  const double tol = rel_tol_ * std::max(1.0, std::abs(log_y));

  // Exponential bracket growth outward from log_r = 0; log_tilde is strictly
  // increasing, so a sign change pins the root.
  double lo = 0.0, hi = 0.0;
  const double at_zero = log_tilde(0.0);
  if (at_zero == log_y) return 0.0;
  if (at_zero < log_y) {
    double step = 1.0;
    hi = step;
    while (log_tilde(hi) < log_y) {
      lo = hi;
      step *= 2.0;
      hi = step;
      if (hi > kBracketLimit)
        throw std::range_error("log_tilde_inverse: no bracket within |log r| <= 1e4");
    }
  } else {
    double step = 1.0;
    lo = -step;
    while (log_tilde(lo) > log_y) {
      hi = lo;
      step *= 2.0;
      lo = -step;
      if (step > kBracketLimit)
        throw std::range_error("log_tilde_inverse: no bracket within |log r| <= 1e4");
    }
  }

  double best = 0.5 * (lo + hi);
  double best_residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter_; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = log_tilde(mid);
    const double residual = std::abs(val - log_y);
    if (residual < best_residual) {
      best_residual = residual;
      best = mid;
    }
    if (residual <= tol) return mid;
    if (val < log_y)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(mid)))
      break;  // interval exhausted at double resolution
  }
  return best;
}

double HEvaluator::h_eval(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("h_eval: t must be finite and nonnegative");
  if (t == 0.0) return 0.0;
  // H(t) = 1 / Ftilde^{-1}(1/t), everything through logs.
  return std::exp(-log_tilde_inverse(-std::log(t)));
}

}  // namespace specbound
