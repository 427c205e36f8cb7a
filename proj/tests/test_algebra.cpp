#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"
#include "mgeom/matrix_io.hpp"
#include "mgeom/random.hpp"

using namespace mgeom;

TEST_CASE("hs_inner on small examples") {
  CHECK(hs_inner(Matrix::identity(2), Matrix::identity(2)) == cplx(2.0, 0.0));
  CHECK(hs_inner(Matrix::diagonal({1, 0}), Matrix::diagonal({0, 1})) == cplx(0.0, 0.0));
  CHECK(hs_inner(pauli_x(), pauli_x()) == cplx(2.0, 0.0));
  CHECK_THROWS_AS(hs_inner(Matrix::identity(2), Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("hs_inner is conjugate symmetric and matches the Frobenius norm") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = sample_engine(11, i);
    const std::size_t n = 1 + i % 7;
    const Matrix a = random_complex(rng, n);
    const Matrix b = random_complex(rng, n);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) <= 1e-14);
    double frob = 0.0;
    for (const auto& z : a.data()) frob += std::norm(z);
    CHECK(std::abs(hs_inner(a, a).real() - frob) <= 1e-12 * frob);
    CHECK(hs_inner(a, a).imag() == doctest::Approx(0.0));
    CHECK(hs_norm(a) == doctest::Approx(std::sqrt(frob)).epsilon(1e-14));
  }
}

TEST_CASE("mean_part") {
  CHECK(mean_part(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(mean_part(pauli_z()).norm() == 0.0);
  CHECK((mean_part(Matrix::diagonal({3, 1})) - Matrix::identity(2) * 2.0).norm() == 0.0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = sample_engine(5, i);
    const Matrix a = random_complex(rng, 4, 3.0);
    const Matrix m = mean_part(a);
    CHECK((mean_part(m) - m).norm() <= 1e-15 * std::max(1.0, m.norm()));
    CHECK(std::abs((a - m).trace()) <= 1e-12 * std::max(1.0, a.norm()));
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(Matrix::identity(2)) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(Matrix::diagonal({0.5, 0.5})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  const double expected = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  CHECK(von_neumann_entropy(Matrix::diagonal({0.75, 0.25})) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.5623).epsilon(1e-4));
  // zero eigenvalue uses 0 log 0 = 0, tiny negative noise is clamped
  CHECK(von_neumann_entropy(Matrix::diagonal({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(Matrix::diagonal({1.0, -1e-14})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(von_neumann_entropy(Matrix::diagonal({1.0, -1e-3})), NotPositive);
}

TEST_CASE("entropy of unit-trace PD matrices lies in [0, log n]") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_engine(17, i);
    const std::size_t n = 2 + i % 6;
    const Matrix rho = random_density(rng, n);
    const double s = von_neumann_entropy(rho);
    CHECK(s >= 0.0);
    CHECK(s <= std::log(static_cast<double>(n)) + 1e-12);
  }
}

TEST_CASE("trace distance and eigenvalue gap") {
  const Matrix a = Matrix::diagonal({1, 0}), b = Matrix::diagonal({0, 1});
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
  CHECK(trace_distance(a, b) == doctest::Approx(2.0));
  const Matrix two = Matrix::identity(2) * 2.0;
  CHECK(trace_distance(two + pauli_z(), two) == doctest::Approx(2.0));
  CHECK(eigenvalue_l1_gap(a, a) == doctest::Approx(0.0));
  CHECK(eigenvalue_l1_gap(a, b) == doctest::Approx(0.0));
  CHECK(eigenvalue_l1_gap(Matrix::diagonal({3, 1}), Matrix::diagonal({2, 2})) == doctest::Approx(2.0));
  CHECK_THROWS_AS(trace_distance(a, Matrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(eigenvalue_l1_gap(a, Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("eigenvalue gap never exceeds trace distance") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_engine(23, i);
    const std::size_t n = 2 + i % 5;
    const Matrix u = random_pd(rng, n, 0.01, 1.5);
    const Matrix v = random_pd(rng, n, 0.01, 1.5);
    CHECK(eigenvalue_l1_gap(u, v) <= trace_distance(u, v) + 1e-12);
    CHECK(trace_distance(u, v) == doctest::Approx(trace_distance(v, u)).epsilon(1e-12));
  }
}

TEST_CASE("eta") {
  CHECK(eta(0.0) == 0.0);
  CHECK(eta(1.0) == doctest::Approx(0.0));
  CHECK(eta(1.0 / std::numbers::e) == doctest::Approx(1.0 / std::numbers::e).epsilon(1e-15));
  double prev = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double v = eta(k / (100.0 * std::numbers::e));
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(eta(-0.1), DomainError);
  CHECK_THROWS_AS(eta(1.5), DomainError);
  CHECK(fannes_bound(0.0, 4) == 0.0);
  CHECK(fannes_bound(0.1, 4) == doctest::Approx(0.1 * std::log(4.0) - 0.1 * std::log(0.1)));
}

TEST_CASE("random generators") {
  const Matrix h = random_hermitian(1, 3, 1.0);
  CHECK(h.hermiticity_violation() == 0.0);
  CHECK(random_hermitian(1, 3, 1.0) == h);

  const Matrix u = random_pd(7, 4, 0.1, 1.0);
  CHECK(hermitian_eigenvalues(u).front() >= 0.1);
  CHECK(u.hermiticity_violation() == 0.0);
  CHECK(random_pd(7, 4, 0.1, 1.0) == u);
  CHECK_FALSE(random_pd(8, 4, 0.1, 1.0) == u);

  CHECK_THROWS_AS(random_pd(1, 0, 0.1, 1.0), ConfigError);
  CHECK_THROWS_AS(random_pd(1, 3, 0.0, 1.0), ConfigError);
  CHECK_THROWS_AS(random_hermitian(1, 3, -1.0), ConfigError);

  auto rng = sample_engine(2, 0);
  const Matrix t = random_traceless_hermitian(rng, 5);
  CHECK(std::abs(t.trace()) <= 1e-14);
  CHECK(t.hermiticity_violation() == 0.0);
}

TEST_CASE("matrix JSON round trip is exact") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = sample_engine(31, i);
    const Matrix a = random_complex(rng, 1 + i % 5, std::pow(10.0, static_cast<double>(i % 7) - 3));
    CHECK(matrix_from_json(matrix_to_json(a)) == a);
  }
  CHECK(matrix_to_json(Matrix::diagonal({0.1, 1.0})) ==
        "{\"n\": 2, \"entries\": [[[0.10000000000000001, 0], [0, 0]], [[0, 0], [1, 0]]]}");
}

TEST_CASE("matrix JSON rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json("{"), ConfigError);
  CHECK_THROWS_AS(matrix_from_json("{\"n\": 2}"), ConfigError);
  CHECK_THROWS_AS(matrix_from_json("{\"n\": 0, \"entries\": []}"), ConfigError);
  CHECK_THROWS_AS(matrix_from_json("{\"n\": 2, \"entries\": [[[1,0],[0,0]]]}"), ConfigError);
  CHECK_THROWS_AS(matrix_from_json("{\"n\": 1, \"entries\": [[[1]]]}"), ConfigError);
  CHECK_THROWS_AS(matrix_from_json("{\"n\": 1, \"entries\": [[[\"x\", 0]]]}"), ConfigError);
  CHECK(matrix_from_json("{\"n\": 1, \"entries\": [[[2.5, -1]]]}")(0, 0) == cplx(2.5, -1.0));
}
