#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include <specbound/linalg.hpp>
#include <specbound/models.hpp>

using namespace specbound;

namespace {

ComplexMatrix random_matrix(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.unit_disk();
  return m;
}

ComplexMatrix diag(std::initializer_list<Complex> entries) {
  const int n = static_cast<int>(entries.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  int i = 0;
  for (Complex e : entries) m(i, i) = e, ++i;
  return m;
}

}  // namespace

TEST_CASE("singular profile accessors") {
  const SingularProfile p({3.0, 2.0, 1.0}, 0.5);
  CHECK(p.size() == 3);
  CHECK(p.largest() == 3.0);
  CHECK(p.tail_sum() == 0.5);
  CHECK(p.sum() == doctest::Approx(6.5).epsilon(1e-15));
  CHECK(!p.all_zero());
  CHECK(SingularProfile({}).all_zero());
  CHECK(SingularProfile({0.0, 0.0}).all_zero());
  CHECK(!SingularProfile({}, 1.0).all_zero());
  CHECK(SingularProfile({}).largest() == 0.0);
}

TEST_CASE("singular profile rejects malformed input") {
  CHECK_THROWS_AS(SingularProfile({1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(SingularProfile({-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SingularProfile({std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(SingularProfile({std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SingularProfile({1.0}, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(SingularProfile({1.0}, std::nan("")), std::invalid_argument);
}

TEST_CASE("eigenvalues are sorted by modulus, then by argument") {
  const SpectrumSet s = eigenvalues(diag({Complex(0, 0), Complex(1, 1), Complex(3, 0)}));
  REQUIRE(s.size() == 3);
  CHECK(std::abs(s.points[0] - Complex(3, 0)) <= 1e-14);
  CHECK(std::abs(s.points[1] - Complex(1, 1)) <= 1e-14);
  CHECK(std::abs(s.points[2]) <= 1e-14);

  // Equal moduli: ascending argument puts -i before +i.
  const SpectrumSet t = eigenvalues(diag({Complex(0, 1), Complex(0, -1)}));
  CHECK(t.points[0].imag() < 0.0);
  CHECK(t.points[1].imag() > 0.0);
}

TEST_CASE("nilpotent jordan block has an exactly zero spectrum") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 1) = 1.0;
  m(1, 2) = 1.0;
  for (const Complex& lambda : eigenvalues(m).points)
    CHECK(std::abs(lambda) <= 1e-12);
}

TEST_CASE("eigenvalue sum reproduces the trace") {
  const ComplexMatrix m = random_matrix(5, 7);
  Complex sum(0.0, 0.0);
  for (const Complex& lambda : eigenvalues(m).points) sum += lambda;
  CHECK(std::abs(sum - m.trace()) <= 1e-10);
}

TEST_CASE("badly scaled shift matrices keep accurate eigenvalues") {
  // Entries span six orders of magnitude; the balanced solver must still
  // recover eigenvalue moduli eps^{(n-1)/n} to near machine precision.
  const double eps = 1e-6;
  const int n = 6;
  const auto [a, b] = weighted_shift_pair(n, eps);
  const double expected = std::pow(eps, (n - 1.0) / n);
  for (const Complex& lambda : eigenvalues(b).points)
    CHECK(std::abs(lambda) == doctest::Approx(expected).epsilon(1e-10));
  for (const Complex& lambda : eigenvalues(a).points)
    CHECK(std::abs(lambda) <= 1e-12);
}

TEST_CASE("singular values of simple matrices") {
  const SingularProfile p = singular_values(diag({Complex(3, 0), Complex(-4, 0)}));
  CHECK(p.values()[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(p.values()[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p.tail_sum() == 0.0);

  // Orthogonal columns: singular values are the column norms.
  const auto [a, b] = weighted_shift_pair(4, 0.01);
  const SingularProfile q = singular_values(a);
  CHECK(q.values()[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.values()[1] == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(q.values()[2] == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(q.values()[3] <= 1e-15);
}

TEST_CASE("unitary matrices have unit singular values") {
  SplitMix64 rng(11);
  const ComplexMatrix u = haar_unitary(4, rng);
  const SingularProfile p = singular_values(u);
  for (double v : p.values()) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("subnormal singular values clamp to exact zero") {
  const SingularProfile p = singular_values(diag({Complex(1, 0), Complex(1e-310, 0)}));
  CHECK(p.values()[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.values()[1] == 0.0);
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(diag({Complex(2, 0), Complex(-5, 0)})) ==
        doctest::Approx(5.0).epsilon(1e-14));
  const double eps = 1e-3;
  const auto [a, b] = weighted_shift_pair(5, eps);
  // A - B has a single nonzero entry of modulus eps.
  CHECK(operator_norm(a - b) == eps);
  CHECK(operator_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(diag({Complex(1, 0), Complex(2, 0), Complex(3, 0)})) ==
        doctest::Approx(6.0).epsilon(1e-14));
  // Rank one u v^*: trace norm is ||u|| ||v||.
  Eigen::Vector2cd u, v;
  u << Complex(1, 0), Complex(0, 2);
  v << Complex(3, 0), Complex(4, 0);
  const ComplexMatrix m = u * v.adjoint();
  CHECK(trace_norm(m) ==
        doctest::Approx(std::sqrt(5.0) * 5.0).epsilon(1e-13));
}

TEST_CASE("schmidt truncation keeps the leading singular directions") {
  const ComplexMatrix m = diag({Complex(5, 0), Complex(3, 0), Complex(1, 0)});
  CHECK((schmidt_truncate(m, 2) - diag({Complex(5, 0), Complex(3, 0), Complex(0, 0)}))
            .norm() <= 1e-12);
  CHECK(schmidt_truncate(m, 0).isZero(1e-14));
  CHECK((schmidt_truncate(m, 3) - m).norm() <= 1e-12);
}

TEST_CASE("schmidt truncation error equals the next singular value") {
  const ComplexMatrix m = random_matrix(6, 3);
  const SingularProfile s = singular_values(m);
  const double gap = operator_norm(m - schmidt_truncate(m, 2));
  CHECK(gap == doctest::Approx(s.values()[2]).epsilon(1e-10));
}

TEST_CASE("matrix operations reject malformed input") {
  const ComplexMatrix rect = ComplexMatrix::Zero(2, 3);
  CHECK_THROWS_AS(eigenvalues(rect), std::invalid_argument);
  CHECK_THROWS_AS(singular_values(rect), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(ComplexMatrix()), std::invalid_argument);

  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(eigenvalues(bad), std::invalid_argument);
  CHECK_THROWS_AS(singular_values(bad), std::invalid_argument);

  const ComplexMatrix ok = ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(schmidt_truncate(ok, -1), std::invalid_argument);
  CHECK_THROWS_AS(schmidt_truncate(ok, 4), std::invalid_argument);
}
