#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <specbound/detbounds.hpp>
#include <specbound/linalg.hpp>
#include <specbound/models.hpp>

using namespace specbound;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("perturbation determinant on diagonal matrices") {
  const ComplexMatrix m = diag2(0.5, 0.25);
  // (1 - 0.5)(1 - 0.25) = 0.375.
  CHECK(std::abs(det_perturbation(m, Complex(1, 0)) - Complex(0.375, 0)) <=
        1e-12);
  CHECK(std::abs(det_perturbation(ComplexMatrix::Zero(2, 2), Complex(1, 0)) -
                 Complex(1, 0)) <= 1e-15);
  // z on the spectrum annihilates one factor.
  CHECK(std::abs(det_perturbation(m, Complex(0.5, 0))) <= 1e-10);
  CHECK_THROWS_AS(det_perturbation(m, Complex(0, 0)), std::invalid_argument);
}

TEST_CASE("determinant modulus is bounded by the trace-norm gauge") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    for (int n : {3, 6}) {
      const auto [a, b] = random_pair(n, seed, 0.0);
      const Complex z = std::polar(2.0 * operator_norm(a), 0.3);
      const double lhs = std::abs(det_perturbation(a, z));
      const double rhs = std::exp(trace_norm(a) / std::abs(z));
      CHECK(lhs <= rhs * (1.0 + 1e-8));
    }
  }
}

TEST_CASE("resolvent lower bound on a diagonal example") {
  const BoundReport r = lower_bound_check(diag2(0.5, 0.25), Complex(1, 0));
  CHECK(r.suite == "det_lower");
  CHECK(r.dim == 2);
  CHECK(r.param == doctest::Approx(1.0).epsilon(1e-15));
  // -log 0.375 against log F_A(1/d) with d = 0.5, F_A(2) = 2 * 1.5 = 3.
  CHECK(r.measured == doctest::Approx(-std::log(0.375)).epsilon(1e-10));
  CHECK(r.bound == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(r.slack == doctest::Approx(r.bound - r.measured).epsilon(1e-12));
  CHECK(r.status == Status::Pass);
}

TEST_CASE("resolvent lower bound is exact for the zero matrix") {
  const BoundReport r =
      lower_bound_check(ComplexMatrix::Zero(2, 2), Complex(1, 0));
  CHECK(r.measured == 0.0);
  CHECK(r.bound == 0.0);
  CHECK(r.status == Status::Pass);
}

TEST_CASE("resolvent lower bound holds on random matrices") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const auto [a, b] = random_pair(8, seed, 0.0);
    const double radius = 2.0 * operator_norm(a);
    for (int j = 0; j < 3; ++j) {
      const Complex z = std::polar(radius, 2.0 * std::numbers::pi * j / 3.0);
      const BoundReport r = lower_bound_check(a, z);
      CHECK(r.slack >= -1e-8);
      CHECK(r.status == Status::Pass);
    }
  }
}

TEST_CASE("resolvent lower bound rejects ill-posed sample points") {
  const ComplexMatrix m = diag2(0.5, 0.25);
  CHECK_THROWS_AS(lower_bound_check(m, Complex(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_check(m, Complex(0.5 + 1e-12, 0)),
                  std::invalid_argument);
}

TEST_CASE("eigenvalue-side upper bounds skip degenerate sample points") {
  const auto [a, b] = random_pair(4, 5, 0.0);
  // B = A: every eigenvalue of B lies on sigma(A), distance zero.
  CHECK(upper_bound_check(a, a).empty());
}

TEST_CASE("eigenvalue-side upper bounds on a rank-one example") {
  // A = 0, B = diag(1, 0): only z = 1 is admissible, and both bounds meet
  // the determinant exactly (everything equals 1).
  const std::vector<BoundReport> rows =
      upper_bound_check(ComplexMatrix::Zero(2, 2), diag2(1.0, 0.0));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].suite == "det_upper_partial");
  CHECK(rows[1].suite == "det_upper_full");
  for (const BoundReport& r : rows) {
    CHECK(r.measured == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(r.bound) <= 1e-12);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("eigenvalue-side upper bounds hold on random pairs") {
  const auto [a, b] = random_pair(6, 5, 0.1);
  const std::vector<BoundReport> rows = upper_bound_check(a, b);
  CHECK(!rows.empty());
  for (const BoundReport& r : rows) {
    CHECK(r.slack >= -1e-8);
    CHECK(r.status == Status::Pass);
  }
  CHECK_THROWS_AS(upper_bound_check(a, ComplexMatrix::Zero(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("truncation study gaps on a diagonal example") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 5.0;
  m(1, 1) = 3.0;
  m(2, 2) = 1.0;
  const std::vector<TruncationRow> rows =
      truncation_study(m, Complex(2, 0), {1, 3});
  REQUIRE(rows.size() == 2);
  // Rank 1 keeps diag(5, 0, 0): ||A_1 - A||_1 = 4,
  // det gap |(-1.5) - 0.375| = 1.875, distance gap |2 - 1| = 1.
  CHECK(rows[0].rank == 1);
  CHECK(rows[0].trace_norm_gap == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rows[0].det_gap == doctest::Approx(1.875).epsilon(1e-12));
  CHECK(rows[0].dist_gap == doctest::Approx(1.0).epsilon(1e-12));
  // Full rank reproduces the matrix.
  CHECK(rows[1].trace_norm_gap <= 1e-12);
  CHECK(rows[1].det_gap <= 1e-12);
  CHECK(rows[1].dist_gap <= 1e-12);
}

TEST_CASE("truncation study rejects ill-posed input") {
  const ComplexMatrix m = diag2(0.5, 0.25);
  CHECK_THROWS_AS(truncation_study(m, Complex(0, 0), {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(truncation_study(m, Complex(0.5, 0), {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(truncation_study(m, Complex(2, 0), {3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(truncation_study(m, Complex(2, 0), {-1}),
                  std::invalid_argument);
}
