#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <specbound/linalg.hpp>
#include <specbound/models.hpp>
#include <specbound/rng.hpp>
#include <specbound/spectra.hpp>

using namespace specbound;

namespace {

SpectrumSet random_set(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SpectrumSet s;
  for (int i = 0; i < n; ++i) s.points.push_back(3.0 * rng.unit_disk());
  return s;
}

}  // namespace

TEST_CASE("point distance picks the nearest spectrum point") {
  const SpectrumSet s{{Complex(3, 0), Complex(0, 4)}};
  CHECK(point_distance(Complex(0, 0), s) == 3.0);
  CHECK(point_distance(Complex(0, 4), s) == 0.0);
  CHECK(point_distance(Complex(3, 4), s) == 3.0);
}

TEST_CASE("directed distance is asymmetric") {
  const SpectrumSet zero{{Complex(0, 0)}};
  const SpectrumSet pair{{Complex(0, 0), Complex(5, 0)}};
  CHECK(directed_hausdorff(zero, pair) == 0.0);
  CHECK(directed_hausdorff(pair, zero) == 5.0);
  CHECK(hausdorff(zero, pair) == 5.0);
  CHECK(hausdorff(pair, zero) == 5.0);
}

TEST_CASE("hausdorff distance is a metric on finite sets") {
  const SpectrumSet s1 = random_set(4, 1);
  const SpectrumSet s2 = random_set(5, 2);
  const SpectrumSet s3 = random_set(6, 3);
  CHECK(hausdorff(s1, s1) == 0.0);
  CHECK(hausdorff(s1, s2) == hausdorff(s2, s1));
  CHECK(hausdorff(s1, s2) > 0.0);
  CHECK(hausdorff(s1, s3) <= hausdorff(s1, s2) + hausdorff(s2, s3) + 1e-12);
}

TEST_CASE("adjoin zero is idempotent on sets containing zero") {
  const SpectrumSet with{{Complex(0, 0), Complex(1, 0)}};
  CHECK(adjoin_zero(with).size() == 2);

  const SpectrumSet without{{Complex(1, 0)}};
  const SpectrumSet extended = adjoin_zero(without);
  CHECK(extended.size() == 2);
  CHECK(point_distance(Complex(0, 0), extended) == 0.0);

  CHECK(adjoin_zero(SpectrumSet{}).size() == 1);
}

TEST_CASE("shift pair distance follows the closed form") {
  const int n = 4;
  const double eps = 0.01;
  const auto [a, b] = weighted_shift_pair(n, eps);
  const double measured =
      hausdorff(adjoin_zero(eigenvalues(a)), adjoin_zero(eigenvalues(b)));
  CHECK(measured ==
        doctest::Approx(std::pow(eps, (n - 1.0) / n)).epsilon(1e-9));
}

TEST_CASE("spectrum operations reject malformed input") {
  const SpectrumSet empty;
  const SpectrumSet ok{{Complex(1, 0)}};
  CHECK_THROWS_AS(point_distance(Complex(0, 0), empty), std::invalid_argument);
  CHECK_THROWS_AS(directed_hausdorff(empty, ok), std::invalid_argument);
  CHECK_THROWS_AS(directed_hausdorff(ok, empty), std::invalid_argument);
  CHECK_THROWS_AS(hausdorff(empty, empty), std::invalid_argument);

  const SpectrumSet bad{{Complex(std::nan(""), 0)}};
  CHECK_THROWS_AS(point_distance(Complex(0, 0), bad), std::invalid_argument);
  CHECK_THROWS_AS(point_distance(Complex(std::nan(""), 0), ok),
                  std::invalid_argument);
}
