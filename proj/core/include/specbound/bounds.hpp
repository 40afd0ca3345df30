#pragma once

#include <optional>

#include "specbound/linalg.hpp"
#include "specbound/report.hpp"

namespace specbound {

// Each checker computes a measured spectral distance and an explicit bound
// for the pair (A, B), both in linear scale, and grades the row with the
// relative slack rule (tolerance 1e-8). All require A, B square, finite and
// of equal dimension.

// Classical n-th root bound on the full Hausdorff distance of the spectra:
//   Hdist(sigma(A), sigma(B)) <= (||A|| + ||B||)^(1-1/n) * ||A - B||^(1/n).
BoundReport elsner_bound(const ComplexMatrix& a, const ComplexMatrix& b);

// Directed bound from the determinant machinery:
//   max_{mu in sigma(B)} d(mu, sigma(A) u {0}) <= H_{F_A}(||A - B||).
// If A = 0 its growth function is constant and the transform does not
// apply; the row is then a Warn with an explanatory note.
BoundReport directed_bound(const ComplexMatrix& a, const ComplexMatrix& b);

// Symmetric bound with the combined growth function F = max(F_A, F_B):
//   Hdist(sigma(A) u {0}, sigma(B) u {0}) <= H_F(||A - B||).
// A = B = 0 yields the trivial zero bound.
BoundReport main_bound(const ComplexMatrix& a, const ComplexMatrix& b);

// Specializations of the symmetric bound obtained by majorizing both growth
// functions by a named family and pulling the gauge constant out via the
// scaling identity H_{F(m r)}(t) = m * H_F(t / m).
enum class CorollaryKind {
  TraceNorm,    // F = exp, gauge m = max of the trace norms
  ExpClass,     // F = exp-class product, gauge m = max exponential gauge
  FiniteRank,   // F = (1+r)^n, gauge m = max of the operator norms
  TwoSingular,  // F = (1+r s1)(1+r s2)^{n-1}, entrywise max profile bounds
};

struct CorollaryParams {
  // Exp-class decay parameters (ExpClass only).
  double a = 1.0;
  double alpha = 1.0;
  // Optional externally supplied gauge for ExpClass; must dominate the
  // measured gauges of both matrices (checked, with 1e-12 relative grace).
  std::optional<double> gauge_bound;
};

BoundReport corollary_bound(CorollaryKind kind, const ComplexMatrix& a,
                            const ComplexMatrix& b,
                            const CorollaryParams& params = {});

// Closed-form reference values for the asymptotic regimes the harness
// measures, so empirical slopes/constants can be compared against the
// predicted ones in one place.
enum class AsymptoteKind {
  PowerExponent,          // slope of log H_{(1+r)^n} vs log t:  1/(2n+1)
  TwoSingularExponent,    // same exponent for the two-singular family
  TwoSingularConstant,    // prefactor s1^{2/(2n+1)} s2^{(2n-2)/(2n+1)}
  ExpClassHConstant,      // coefficient of -|log t|^{alpha/(1+alpha)} in log H
  ExpClassGrowthConstant, // coefficient of (log r)^{1+1/alpha} in log F
  ShiftElsnerExponent,    // n-th root law: 1/n
  ShiftDistanceExponent,  // exact spectral distance law: (n-1)/n
  ShiftCoupledExponent,   // coupled two-singular prediction: (2n-1)/(2n+1)
  ShiftBalanceExponent,   // balance of r(1+r)^2 ~ 1/eps: 1/3
};

struct AsymptoteParams {
  int n = 1;
  double a = 1.0;
  double alpha = 1.0;
  double s1 = 1.0;
  double s2 = 1.0;
};

double reference_asymptote(AsymptoteKind kind, const AsymptoteParams& p);

}  // namespace specbound
