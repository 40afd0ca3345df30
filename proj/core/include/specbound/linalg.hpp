#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "specbound/spectra.hpp"

namespace specbound {

using ComplexMatrix = Eigen::MatrixXcd;

// Nonincreasing sequence s_1 >= s_2 >= ... >= s_N >= 0 of singular values,
// plus an optional upper bound on the sum of everything past position N.
// The tail term lets a finite prefix stand in for an infinite sequence while
// keeping derived quantities (trace-norm sums, growth products) valid upper
// bounds. Profiles extracted from matrices always carry tail_sum = 0.
class SingularProfile {
 public:
  // Throws std::invalid_argument unless values are finite, nonnegative and
  // nonincreasing, and tail_sum is finite and nonnegative.
  explicit SingularProfile(std::vector<double> values, double tail_sum = 0.0);

  const std::vector<double>& values() const { return values_; }
  double tail_sum() const { return tail_sum_; }
  std::size_t size() const { return values_.size(); }

  // s_1, or 0 for an empty profile.
  double largest() const { return values_.empty() ? 0.0 : values_.front(); }
  // Sum of the stored values plus the tail bound.
  double sum() const;
  bool all_zero() const;

 private:
  std::vector<double> values_;
  double tail_sum_ = 0.0;
};

// Eigenvalues of a square matrix, ordered by nonincreasing modulus with ties
// broken by nondecreasing argument in (-pi, pi]. The matrix is balanced by a
// diagonal similarity (exact powers of two) before the Schur iteration, which
// keeps badly scaled inputs — e.g. shift-like matrices with entries spanning
// many orders of magnitude — accurate to near machine precision.
// Throws std::invalid_argument for non-square/empty/non-finite input and
// std::runtime_error if the QR iteration fails to converge.
SpectrumSet eigenvalues(const ComplexMatrix& m);

// Singular values as a SingularProfile (tail_sum = 0). Values below 1e-300
// are clamped to exact zero so downstream log-domain code never sees
// denormal noise.
SingularProfile singular_values(const ComplexMatrix& m);

// Largest singular value; 0 for the zero matrix.
double operator_norm(const ComplexMatrix& m);

// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

// Best approximation of m by a matrix of rank at most k (truncated singular
// value expansion). Requires 0 <= k <= dim.
ComplexMatrix schmidt_truncate(const ComplexMatrix& m, int k);

}  // namespace specbound
