#include "specbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace specbound {

namespace {

// Singular values below this are indistinguishable from zero for every use
// here (they would contribute log-domain noise only); clamp them out.
constexpr double kSingularValueFloor = 1e-300;

void check_square_finite(const ComplexMatrix& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) +
                                ": matrix must be square and nonempty");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

// Parlett-Reinsch balancing: diagonal similarity with exact powers of two
// that roughly equalizes row/column 1-norms. Scaling by powers of two is
// exact in binary floating point, so the eigenvalues of the balanced matrix
// are those of the input with no rounding introduced by the transform
// itself; the payoff is a dramatically better conditioned QR iteration for
// badly scaled inputs.
ComplexMatrix balanced(ComplexMatrix a) {
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if (c + r < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

}  // namespace

SingularProfile::SingularProfile(std::vector<double> values, double tail_sum)
    : values_(std::move(values)), tail_sum_(tail_sum) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument(
          "SingularProfile: values must be finite and nonnegative");
    if (k > 0 && v > values_[k - 1])
      throw std::invalid_argument("SingularProfile: values must be nonincreasing");
  }
  if (!std::isfinite(tail_sum_) || tail_sum_ < 0.0)
    throw std::invalid_argument(
        "SingularProfile: tail_sum must be finite and nonnegative");
}

double SingularProfile::sum() const {
  double total = tail_sum_;
  // Smallest-first accumulation keeps the sum accurate for steep profiles.
  for (auto it = values_.rbegin(); it != values_.rend(); ++it) total += *it;
  return total;
}

bool SingularProfile::all_zero() const {
  return tail_sum_ == 0.0 && (values_.empty() || values_.front() == 0.0);
}

SpectrumSet eigenvalues(const ComplexMatrix& m) {
  check_square_finite(m, "eigenvalues");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(balanced(m),
                                                  /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: QR iteration did not converge");
  SpectrumSet out;
  out.points.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + m.rows());
  std::sort(out.points.begin(), out.points.end(),
            [](const Complex& x, const Complex& y) {
              const double ax = std::abs(x), ay = std::abs(y);
              if (ax != ay) return ax > ay;
              return std::arg(x) < std::arg(y);
            });
  return out;
}

SingularProfile singular_values(const ComplexMatrix& m) {
  check_square_finite(m, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  std::vector<double> s(svd.singularValues().data(),
                        svd.singularValues().data() + m.rows());
  for (double& v : s)
    if (v < kSingularValueFloor) v = 0.0;
  return SingularProfile(std::move(s));
}

double operator_norm(const ComplexMatrix& m) {
  return singular_values(m).largest();
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

ComplexMatrix schmidt_truncate(const ComplexMatrix& m, int k) {
  check_square_finite(m, "schmidt_truncate");
  const int n = static_cast<int>(m.rows());
  if (k < 0 || k > n)
    throw std::invalid_argument("schmidt_truncate: rank out of range");
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = svd.singularValues();
  for (int j = k; j < n; ++j) s(j) = 0.0;
  const Eigen::VectorXcd sc = s.cast<Complex>();
  return svd.matrixU() * sc.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace specbound
