#pragma once

#include "specbound/growth.hpp"

namespace specbound {

// Evaluator for the bound transform H_F attached to a growth function F:
//
//   Ftilde(r) = r * F(r)^2          (strictly increasing, onto (0, inf))
//   H_F(t)    = 1 / Ftilde^{-1}(1/t),  H_F(0) = 0.
//
// H_F is strictly increasing and H_F(t) >= t; it converts a perturbation
// norm into a spectral-distance bound. Inversion is performed on
// log Ftilde by exponential bracket growth from log r = 0 followed by
// bisection, so only monotonicity of F is relied upon.
class HEvaluator {
 public:
  // rel_tol must lie in (0, 1e-6] and max_iter must be positive.
  // Throws std::invalid_argument on bad parameters or degenerate F.
  explicit HEvaluator(GrowthFunction f, double rel_tol = 1e-13,
                      int max_iter = 300);

  // log Ftilde(exp(log_r)) = log_r + 2 log F(exp(log_r)).
  double log_tilde(double log_r) const;

  // log_r solving log_tilde(log_r) = log_y, to within
  // rel_tol * max(1, |log_y|) in the residual. Throws std::range_error if no
  // bracket is found within |log_r| <= 1e4 and std::invalid_argument for
  // non-finite log_y.
  double log_tilde_inverse(double log_y) const;

  // H_F(t) for t >= 0 (0 maps to 0). Throws std::invalid_argument for
  // negative or non-finite t.
  double h_eval(double t) const;

  const GrowthFunction& growth() const { return f_; }

 private:
  GrowthFunction f_;
  double rel_tol_;
  int max_iter_;
};

}  // namespace specbound
