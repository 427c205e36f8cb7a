#include <doctest.h>

#include <cmath>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"
#include "mgeom/random.hpp"
#include "mgeom/spectral.hpp"
#include "oracle.hpp"

using namespace mgeom;

TEST_CASE("n = 2 spectrum is {0, 1, 1, 2}") {
  const auto s = spectrum(make_context(2));
  const std::vector<double> expected{0, 1, 1, 2};
  REQUIRE(s.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(s.eigenvalues()[k] - expected[k]) <= 1e-12);
  CHECK(lambda1(s) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.kernel_dimension() == 1);
}

TEST_CASE("spectrum invariants for clock/shift geometries") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto ctx = make_context(n);
    const auto s = spectrum(ctx);
    const double lmax = s.lambda_max();
    CHECK(s.kernel_dimension() == 1);
    CHECK(std::abs(s.eigenvalues()[0]) <= 1e-10);
    CHECK(s.eigenvalues()[0] >= -1e-10 * lmax);

    // phi_0 is I / sqrt(n) up to a phase
    const Matrix phi0 = s.eigenmatrix(0);
    const double overlap = std::abs(hs_inner(Matrix::identity(n) * (1.0 / std::sqrt(double(n))), phi0));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));

    double trace_op = 0.0, sum = 0.0;
    const auto sup = assemble_superoperator(ctx);
    for (std::size_t k = 0; k < sup.dim; ++k) trace_op += sup.op(k, k).real();
    for (std::size_t j = 0; j < s.size(); ++j) {
      sum += s.eigenvalues()[j];
      const Matrix phi = s.eigenmatrix(j);
      CHECK((laplacian_apply(ctx, phi) - phi * s.eigenvalues()[j]).norm() <= 1e-9 * std::max(1.0, lmax));
    }
    CHECK(sum == doctest::Approx(trace_op).epsilon(1e-9));

    // orthonormality of the eigenmatrices in the Hilbert-Schmidt product
    const Matrix& V = s.eigenvectors();
    CHECK((V.adjoint() * V - Matrix::identity(V.n())).norm() <= 1e-10 * V.n());

    // agrees with an independent assembly and eigensolver
    const auto ref = oracle::eigenvalues(oracle::brute_force_superoperator(ctx));
    for (std::size_t j = 0; j < s.size(); ++j) CHECK(std::abs(ref[j] - s.eigenvalues()[j]) <= 1e-10);
  }
}

TEST_CASE("spectrum is symmetric under swapping the generators") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto ctx = make_context(n);
    const auto a = spectrum(ctx), b = spectrum(ctx.swapped());
    for (std::size_t j = 0; j < a.size(); ++j)
      CHECK(std::abs(a.eigenvalues()[j] - b.eigenvalues()[j]) <= 1e-9);
  }
}

TEST_CASE("lambda1 is the minimum Rayleigh quotient on trace-free matrices") {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    const auto ctx = make_context(n);
    const auto s = spectrum(ctx);
    const double lam1 = lambda1(s);
    double min_q = 1e300;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = sample_engine(71, i);
      Matrix a = random_complex(rng, n);
      a -= mean_part(a);
      min_q = std::min(min_q, rayleigh_quotient(ctx, a));
    }
    CHECK(min_q >= lam1 - 1e-9);
    const Matrix phi1 = s.eigenmatrix(lambda1_index(s));
    CHECK(std::abs(rayleigh_quotient(ctx, phi1) - lam1) <= 1e-10);
    CHECK(std::abs(hs_inner(Matrix::identity(n), phi1)) <= 1e-10);
  }
}

TEST_CASE("lambda1 fails when every eigenvalue is in the kernel") {
  const Matrix c = Matrix::identity(3) * 2.0;
  const auto s = spectrum(make_context(3, CustomGenerators{c, c}));
  CHECK(s.kernel_dimension() == 9);
  CHECK_THROWS_AS(lambda1(s), DomainError);
}

TEST_CASE("heat semigroup on closed-form inputs") {
  const auto s = spectrum(make_context(2));
  for (double t : {0.0, 0.3, 1.0, 7.5}) {
    CHECK((heat_semigroup_apply(s, t, Matrix::identity(2)) - Matrix::identity(2)).norm() <= 1e-14);
    CHECK((heat_semigroup_apply(s, t, pauli_z()) - pauli_z() * std::exp(-t)).norm() <= 1e-14);
    CHECK((heat_semigroup_apply(s, t, pauli_y()) - pauli_y() * std::exp(-2.0 * t)).norm() <= 1e-14);
  }
  CHECK_THROWS_AS(heat_semigroup_apply(s, -1.0, pauli_z()), DomainError);
}

TEST_CASE("heat semigroup laws") {
  for (std::size_t n : {3u, 5u}) {
    const auto s = spectrum(make_context(n));
    for (std::uint64_t i = 0; i < 20; ++i) {
      auto rng = sample_engine(73, i);
      const Matrix a = random_complex(rng, n);
      const double t1 = 0.1 * static_cast<double>(i % 5), t2 = 0.05 * static_cast<double>(i % 3);
      const Matrix composed = heat_semigroup_apply(s, t1, heat_semigroup_apply(s, t2, a));
      CHECK((composed - heat_semigroup_apply(s, t1 + t2, a)).norm() <= 1e-9);
      CHECK(heat_semigroup_apply(s, 0.0, a) == a);
      const Matrix at = heat_semigroup_apply(s, t1 + 0.2, a);
      CHECK(std::abs(at.trace() - a.trace()) <= 1e-12 * std::max(1.0, a.norm()));
      CHECK(at.norm() <= a.norm() * (1.0 + 1e-14));
      CHECK((heat_semigroup_apply(s, 1e6, a) - mean_part(a)).norm() <= 1e-9);

      const Matrix p = random_pd(rng, n, 0.01, 3.0);
      for (double t : {0.01, 0.1, 1.0})
        CHECK(hermitian_eigenvalues(heat_semigroup_apply(s, t, p).hermitian_part()).front() > -1e-10 * p.norm());
    }
  }
}

TEST_CASE("heat trace") {
  const auto s2 = spectrum(make_context(2));
  for (double t : {0.0, 0.2, 1.0, 3.0})
    CHECK(heat_trace(s2, t) == doctest::Approx(1.0 + 2.0 * std::exp(-t) + std::exp(-2.0 * t)).epsilon(1e-13));
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = spectrum(make_context(n));
    CHECK(heat_trace(s, 0.0) == doctest::Approx(double(n * n)));
    CHECK(std::abs(heat_trace(s, 1e3 / lambda1(s)) - 1.0) <= 1e-9);
    double prev = heat_trace(s, 0.0);
    for (int k = 1; k <= 20; ++k) {
      const double h = heat_trace(s, 0.1 * k);
      CHECK(h < prev);
      prev = h;
    }
  }
  CHECK_THROWS_AS(heat_trace(s2, -0.5), DomainError);
}
