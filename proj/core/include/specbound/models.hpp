#pragma once

#include <cstdint>
#include <utility>

#include "specbound/linalg.hpp"
#include "specbound/rng.hpp"

namespace specbound {

// Weighted cyclic shift pair on C^n, n >= 2, eps in (0, 1):
//   A e_1 = e_2,  A e_k = eps e_{k+1} (1 < k < n),  A e_n = 0,
// and B identical except B e_n = eps e_1. A is nilpotent; B's eigenvalues
// are the n-th roots of eps^{n-1}; ||A - B|| = eps exactly. The pair is the
// standard witness that the spectral distance can be as large as
// ||A - B||^{(n-1)/n} despite the tiny perturbation.
std::pair<ComplexMatrix, ComplexMatrix> weighted_shift_pair(int n, double eps);

// Random pair: A has i.i.d. entries uniform on the disk of radius 1/sqrt(n);
// B = A + delta * P with P an independent same-ensemble matrix normalized to
// ||P|| = 1, so ||A - B|| = delta up to rounding. delta = 0 returns B = A
// bit for bit. Deterministic in (n, seed, delta).
std::pair<ComplexMatrix, ComplexMatrix> random_pair(int n, std::uint64_t seed,
                                                    double delta);

struct ExpClassParams {
  double a = 1.0;
  double alpha = 1.0;
  double m = 1.0;
};

// U diag(m e^{-a k^alpha})_{k=1..n} V* with U, V independent Haar unitaries
// drawn from the seeded stream. Singular values are exactly the prescribed
// profile; eigenvalues are scrambled.
ComplexMatrix exp_class_matrix(const ExpClassParams& p, int n,
                               std::uint64_t seed);

// Smallest m with s_k(M) <= m exp(-a k^alpha) for all k; 0 for the zero
// matrix. Computed in the log domain so large k never overflows.
double gauge(const ComplexMatrix& m, double a, double alpha);

// Haar-distributed unitary via QR of a Ginibre matrix with the phase of the
// R diagonal absorbed (diag(R) > 0 convention), drawn from rng.
ComplexMatrix haar_unitary(int n, SplitMix64& rng);

}  // namespace specbound
