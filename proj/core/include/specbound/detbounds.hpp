#pragma once

#include <vector>

#include "specbound/linalg.hpp"
#include "specbound/report.hpp"

namespace specbound {

// det(I - z^{-1} A), computed as prod_k (1 - lambda_k / z) over the computed
// eigenvalues. Requires z != 0.
Complex det_perturbation(const ComplexMatrix& a, Complex z);

// Checks the resolvent-side lower bound
//   -log |det(I - z^{-1} A)|  <=  log F_A(1 / d(z, sigma(A)))
// where F_A is the singular-value growth function of A. The left side is
// accumulated as -sum_k log |1 - lambda_k / z| so near-singular determinants
// never underflow. Requires z != 0 at spectral distance > 1e-8; the row
// passes when slack >= -1e-8 (absolute, log domain).
BoundReport lower_bound_check(const ComplexMatrix& a, Complex z);

// Checks, at every admissible eigenvalue z of B, the two upper bounds for
// |det(I - z^{-1} A)| that drive the spectral-distance theorems:
//
//   partial:  (||A - B|| / d) * prod_{k <= n-1} (1 + s_k(A) / d)
//   full:     (||A - B|| / d) * F_A(1 / d)
//
// with d = d(z, sigma(A) union {0}). Admissible means |z| > 1e-10 and
// d > 1e-8; other eigenvalues of B are skipped (both bounds blow up as the
// distance degenerates, so there is nothing to verify there). Two rows per
// admissible z, compared in the log domain with absolute tolerance 1e-8.
std::vector<BoundReport> upper_bound_check(const ComplexMatrix& a,
                                           const ComplexMatrix& b);

// One row of a Schmidt-truncation convergence experiment.
struct TruncationRow {
  int rank = 0;           // truncation rank k
  double trace_norm_gap = 0.0;  // || A_k - A ||_1
  double det_gap = 0.0;   // | det(I - A_k/z) - det(I - A/z) |
  double dist_gap = 0.0;  // | d(z, sigma(A_k)) - d(z, sigma(A)) |
};

// Evaluates the three gaps for each requested rank. Requires z != 0 at
// spectral distance > 1e-8 from sigma(A), and 0 <= k <= dim for every k.
std::vector<TruncationRow> truncation_study(const ComplexMatrix& a, Complex z,
                                            const std::vector<int>& ranks);

}  // namespace specbound
