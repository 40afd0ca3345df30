#pragma once

#include <complex>
#include <vector>

namespace specbound {

using Complex = std::complex<double>;

// Finite multiset of eigenvalues. Repeated points are kept as-is; they do not
// affect any of the distance operations below.
struct SpectrumSet {
  std::vector<Complex> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// min over lambda in s of |z - lambda|. Throws std::invalid_argument if s is
// empty or contains a non-finite point.
double point_distance(Complex z, const SpectrumSet& s);

// Directed Hausdorff distance: max over lambda in `from` of the distance to
// `to`. Exact over the finite sets (no tolerance involved).
double directed_hausdorff(const SpectrumSet& from, const SpectrumSet& to);

// Symmetric Hausdorff distance: max of the two directed distances.
double hausdorff(const SpectrumSet& s1, const SpectrumSet& s2);

// Copy of s with 0 adjoined, unless 0 is already an exact member.
SpectrumSet adjoin_zero(const SpectrumSet& s);

}  // namespace specbound
