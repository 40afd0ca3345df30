#pragma once

// Brute-force reference computations used to cross-check the fast library
// implementations.  Everything here is deliberately slow and simple.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <specbound/growth.hpp>

namespace oracles {

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

// Smallest r on a uniform grid with r * F(r)^2 >= y.  Used to sanity-check
// the bisection-based inverse at coarse resolution.
inline double grid_invert_tilde(const specbound::GrowthFunction& f, double y,
                                double step) {
  for (double r = step; r < 1e4; r += step) {
    const double val = r * std::exp(2.0 * f.log_eval(std::log(r)));
    if (val >= y) return r;
  }
  throw std::runtime_error("grid_invert_tilde: no crossing below r = 1e4");
}

// Direct product evaluation of prod_k (1 + r * exp(-a k^alpha)) with a fixed
// term count, as an independent reference for the adaptive evaluator.
inline double direct_log_exp_class(double a, double alpha, double r,
                                   int terms) {
  double acc = 0.0;
  for (int k = terms; k >= 1; --k) {
    acc += std::log1p(r * std::exp(-a * std::pow(double(k), alpha)));
  }
  return acc;
}

}  // namespace oracles
