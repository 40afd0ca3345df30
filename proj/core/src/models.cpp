#include "specbound/models.hpp"

#include <cmath>
#include <stdexcept>

namespace specbound {

std::pair<ComplexMatrix, ComplexMatrix> weighted_shift_pair(int n, double eps) {
  if (n < 2)
    throw std::invalid_argument("weighted_shift_pair: n must be >= 2");
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("weighted_shift_pair: eps must lie in (0, 1)");
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  a(1, 0) = 1.0;
  for (int k = 1; k + 1 < n; ++k) a(k + 1, k) = eps;
  ComplexMatrix b = a;
  b(0, n - 1) = eps;  // closing the cycle moves the spectrum by eps^{(n-1)/n}
  return {a, b};
}

std::pair<ComplexMatrix, ComplexMatrix> random_pair(int n, std::uint64_t seed,
                                                    double delta) {
  if (n < 1) throw std::invalid_argument("random_pair: n must be >= 1");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("random_pair: delta must be finite and >= 0");
  SplitMix64 rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.unit_disk() * scale;
  if (delta == 0.0) return {a, a};

  ComplexMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = rng.unit_disk() * scale;
  const double norm = operator_norm(p);
  if (norm == 0.0)
    throw std::runtime_error("random_pair: degenerate perturbation draw");
  return {a, a + (delta / norm) * p};
}

ComplexMatrix haar_unitary(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  ComplexMatrix g(n, n);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = Complex(rng.normal(), rng.normal()) * scale;
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the gauge so the factorization is G = Q' R' with diag(R') > 0; this
  // makes Q' Haar-distributed rather than biased by the QR phase convention.
  for (int j = 0; j < n; ++j) {
    const Complex rjj = qr.matrixQR()(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

ComplexMatrix exp_class_matrix(const ExpClassParams& p, int n,
                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("exp_class_matrix: n must be >= 1");
  if (!(p.a > 0.0) || !(p.alpha > 0.0) || !(p.m > 0.0))
    throw std::invalid_argument(
        "exp_class_matrix: a, alpha, m must be positive");
  SplitMix64 master(seed);
  SplitMix64 rng_u(master.next());
  SplitMix64 rng_v(master.next());
  const ComplexMatrix u = haar_unitary(n, rng_u);
  const ComplexMatrix v = haar_unitary(n, rng_v);
  Eigen::VectorXcd d(n);
  for (int k = 1; k <= n; ++k)
    d(k - 1) = p.m * std::exp(-p.a * std::pow(static_cast<double>(k), p.alpha));
  return u * d.asDiagonal() * v.adjoint();
}

double gauge(const ComplexMatrix& m, double a, double alpha) {
  if (!(a > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("gauge: a and alpha must be positive");
  const SingularProfile prof = singular_values(m);
  // max_k s_k e^{a k^alpha}, accumulated in logs so large k cannot overflow
  // before the max is taken.
  bool any = false;
  double best_log = 0.0;
  for (std::size_t k = 0; k < prof.size(); ++k) {
    const double s = prof.values()[k];
    if (s <= 0.0) continue;
    const double log_term =
        std::log(s) + a * std::pow(static_cast<double>(k + 1), alpha);
    if (!any || log_term > best_log) best_log = log_term;
    any = true;
  }
  return any ? std::exp(best_log) : 0.0;
}

}  // namespace specbound
