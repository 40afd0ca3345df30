#include "specbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specbound {

namespace {

void check_nonempty_finite(const SpectrumSet& s, const char* who) {
  if (s.points.empty())
    throw std::invalid_argument(std::string(who) + ": empty spectrum set");
  for (const Complex& p : s.points)
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw std::invalid_argument(std::string(who) + ": non-finite point");
}

}  // namespace

double point_distance(Complex z, const SpectrumSet& s) {
  check_nonempty_finite(s, "point_distance");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("point_distance: non-finite query point");
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& p : s.points) best = std::min(best, std::abs(z - p));
  return best;
}

double directed_hausdorff(const SpectrumSet& from, const SpectrumSet& to) {
  check_nonempty_finite(from, "directed_hausdorff");
  check_nonempty_finite(to, "directed_hausdorff");
  double worst = 0.0;
  for (const Complex& p : from.points)
    worst = std::max(worst, point_distance(p, to));
  return worst;
}

double hausdorff(const SpectrumSet& s1, const SpectrumSet& s2) {
  return std::max(directed_hausdorff(s1, s2), directed_hausdorff(s2, s1));
}

SpectrumSet adjoin_zero(const SpectrumSet& s) {
  SpectrumSet out = s;
  const bool has_zero = std::any_of(
      out.points.begin(), out.points.end(),
      [](const Complex& p) { return p.real() == 0.0 && p.imag() == 0.0; });
  if (!has_zero) out.points.emplace_back(0.0, 0.0);
  return out;
}

}  // namespace specbound
