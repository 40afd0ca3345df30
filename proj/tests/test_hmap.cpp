#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <specbound/growth.hpp>
#include <specbound/hmap.hpp>
#include <specbound/linalg.hpp>

#include "oracles.hpp"

using namespace specbound;

namespace {

std::vector<GrowthFunction> family() {
  return {
      GrowthFunction::profile(SingularProfile({0.5, 0.25})),
      GrowthFunction::exponential(),
      GrowthFunction::exp_class(1.0, 1.0),
      GrowthFunction::power_one_plus(1),
      GrowthFunction::power_one_plus(4),
      GrowthFunction::two_singular(2.0, 0.5, 5),
      GrowthFunction::profile(SingularProfile({0.5, 0.25})).scaled(3.5),
      combine_max(GrowthFunction::exponential(), GrowthFunction::power_one_plus(3)),
  };
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i)
    out.push_back(lo * std::pow(hi / lo, i / (count - 1.0)));
  return out;
}

}  // namespace

TEST_CASE("log_tilde adds twice the growth to the radius") {
  // r (1+r)^2 at r = 1 is 4.
  const HEvaluator h1(GrowthFunction::power_one_plus(1));
  CHECK(h1.log_tilde(0.0) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-14));
  // r e^{2r} at r = 1 is e^2.
  const HEvaluator h2(GrowthFunction::exponential());
  CHECK(h2.log_tilde(0.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("log_tilde degenerates to log r for tiny radii") {
  for (const GrowthFunction& f : family()) {
    const HEvaluator h(f);
    CHECK(std::abs(h.log_tilde(-700.0) + 700.0) <= 1.0);
  }
}

TEST_CASE("inverse recovers exact anchor points") {
  const HEvaluator h1(GrowthFunction::power_one_plus(1));
  CHECK(std::abs(h1.log_tilde_inverse(std::log(4.0))) <= 1e-12);
  const HEvaluator h2(GrowthFunction::exponential());
  CHECK(h2.log_tilde_inverse(2.0) == 0.0);
}

TEST_CASE("inverse agrees with a brute-force grid scan") {
  const GrowthFunction f = GrowthFunction::profile(SingularProfile({0.5, 0.25}));
  const HEvaluator h(f);
  const double r_fast = std::exp(h.log_tilde_inverse(std::log(10.0)));
  const double r_grid = oracles::grid_invert_tilde(f, 10.0, 1e-6);
  CHECK(std::abs(r_fast - r_grid) <= 2e-6);
}

TEST_CASE("h_eval hits closed-form anchor values") {
  // (1/t) = 4 = r(1+r)^2 at r = 1, so H(1/4) = 1.
  const HEvaluator h1(GrowthFunction::power_one_plus(1));
  CHECK(h1.h_eval(0.25) == doctest::Approx(1.0).epsilon(1e-12));
  // (1/t) = e^2 = r e^{2r} at r = 1, so H(e^{-2}) = 1.
  const HEvaluator h2(GrowthFunction::exponential());
  CHECK(h2.h_eval(std::exp(-2.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("h is zero at zero, increasing, and dominates the identity") {
  for (const GrowthFunction& f : family()) {
    const HEvaluator h(f);
    CHECK(h.h_eval(0.0) == 0.0);
    double prev = 0.0;
    for (double t : log_spaced(1e-8, 10.0, 12)) {
      const double v = h.h_eval(t);
      CHECK(v > prev);
      CHECK(v >= t * (1.0 - 1e-10));
      prev = v;
    }
  }
}

TEST_CASE("transform round trip is tight across the whole family") {
  for (const GrowthFunction& f : family()) {
    const HEvaluator h(f);
    for (double log_y = -200.0; log_y <= 200.0; log_y += 8.0) {
      const double log_r = h.log_tilde_inverse(log_y);
      CHECK(std::abs(h.log_tilde(log_r) - log_y) <=
            1e-12 * std::max(1.0, std::abs(log_y)));
    }
  }
}

TEST_CASE("pointwise ordering of growth functions transfers to h") {
  // (1 + 0.5 r)(1 + 0.25 r) <= (1 + r)^2 for all r >= 0.
  const HEvaluator small(GrowthFunction::profile(SingularProfile({0.5, 0.25})));
  const HEvaluator large(GrowthFunction::power_one_plus(2));
  for (double t : log_spaced(1e-10, 1e2, 50))
    CHECK(small.h_eval(t) <= large.h_eval(t) * (1.0 + 1e-10));
}

TEST_CASE("radius scaling pulls out of the transform") {
  const GrowthFunction f = GrowthFunction::profile(SingularProfile({0.5, 0.25}));
  const HEvaluator base(f);
  for (double m : {0.1, 2.0, 100.0}) {
    const HEvaluator scaled_h(f.scaled(m));
    for (double t : log_spaced(1e-8, 10.0, 20)) {
      const double lhs = scaled_h.h_eval(t);
      const double rhs = m * base.h_eval(t / m);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("evaluator rejects malformed input") {
  const GrowthFunction zero = GrowthFunction::profile(SingularProfile({0.0}));
  CHECK_THROWS_AS(HEvaluator{zero}, std::invalid_argument);

  const GrowthFunction f = GrowthFunction::power_one_plus(1);
  CHECK_THROWS_AS(HEvaluator(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HEvaluator(f, -1e-13), std::invalid_argument);
  CHECK_THROWS_AS(HEvaluator(f, 1e-5), std::invalid_argument);
  CHECK_THROWS_AS(HEvaluator(f, 1e-13, 0), std::invalid_argument);

  const HEvaluator h(f);
  CHECK_THROWS_AS(h.h_eval(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(h.h_eval(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(h.log_tilde_inverse(std::nan("")), std::invalid_argument);
  // Targets past |log r| = 1e4 have no physical bracket.
  CHECK_THROWS_AS(h.log_tilde_inverse(1e5), std::range_error);
  CHECK_THROWS_AS(h.log_tilde_inverse(-1e5), std::range_error);
}

TEST_CASE("iteration budget of one still terminates") {
  const HEvaluator h(GrowthFunction::power_one_plus(1), 1e-13, 1);
  CHECK(std::isfinite(h.log_tilde_inverse(std::log(7.0))));
}
