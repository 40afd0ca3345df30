#pragma once

#include <memory>
#include <string>

#include "specbound/linalg.hpp"

namespace specbound {

// Nondecreasing functions F : [0, inf) -> [1, inf) with F(0) = 1 that
// majorize the characteristic-determinant product prod_k (1 + r s_k) of an
// operator. All evaluation happens in the log domain: the argument r is
// passed as log r and the return value is log F(r), so products with tiny
// singular values and enormous radii stay representable.
//
// Instances are immutable values; copies share the underlying node.
class GrowthFunction {
 public:
  // prod_k (1 + r s_k) over the stored values, times exp(r * tail_sum) as a
  // certified upper bound for the unstored tail.
  static GrowthFunction profile(SingularProfile p);

  // Shorthand for profile(singular_values(m)).
  static GrowthFunction from_matrix(const ComplexMatrix& m);

  // exp(r): the trace-norm gauge limit.
  static GrowthFunction exponential();

  // prod_{k>=1} (1 + r exp(-a k^alpha)), a > 0, alpha > 0. Evaluated by
  // adaptive truncation at the first k with r exp(-a k^alpha) < 1e-18, plus
  // an integral-comparison bound for the remainder, so the result is a
  // certified upper bound of the infinite product.
  static GrowthFunction exp_class(double a, double alpha);

  // (1 + r)^n, n >= 1.
  static GrowthFunction power_one_plus(int n);

  // (1 + r s1)(1 + r s2)^(n-1), s1 >= s2 >= 0, n >= 1.
  static GrowthFunction two_singular(double s1, double s2, int n);

  // r -> F(m r), m > 0.
  GrowthFunction scaled(double m) const;

  // log F(exp(log_r)). Accepts log_r in [-inf, +inf); -inf gives exactly 0.
  // Throws std::invalid_argument for NaN and std::domain_error for +inf.
  double log_eval(double log_r) const;

  // True when F is the constant 1 (profile of a zero operator), i.e. not
  // strictly increasing and hence not invertible.
  bool degenerate() const;

  // Short structural name, e.g. "profile[3]" or "max(exp, (1+r)^4)".
  std::string describe() const;

 private:
  struct Node;
  explicit GrowthFunction(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  friend GrowthFunction combine_max(const GrowthFunction&, const GrowthFunction&);
};

// Pointwise maximum, max(F1(r), F2(r)).
GrowthFunction combine_max(const GrowthFunction& f1, const GrowthFunction& f2);

// Free-function spelling of GrowthFunction::scaled.
GrowthFunction scale(const GrowthFunction& f, double m);

namespace detail {
// Exposed for the truncation-stability tests: log of the exp-class product
// with an explicit per-term floor.
double log_exp_class(double a, double alpha, double log_r, double term_floor);
}  // namespace detail

}  // namespace specbound
