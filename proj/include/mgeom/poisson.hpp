#pragma once

#include <cstdint>

#include "mgeom/geometry.hpp"
#include "mgeom/spectral.hpp"

namespace mgeom {

struct PoissonSolution {
  Matrix solution;              // trace-free representative of the class in M_n / C I
  double residual = 0.0;        // ||Lap(solution) - b|| / max(1, ||b||)
  double projected_source_norm = 0.0; // ||b - mean_part(b)||
};

inline constexpr double kSolvabilityTol = 1e-10;

/// |tr b| <= tol * max(1, ||b||).
bool is_solvable(const Matrix& b, double tol = kSolvabilityTol);

/// Solves Lap(a) = b through the spectral pseudo-inverse.
/// NotSolvable when b has a trace, DegenerateGeometry when the kernel is larger than C I.
PoissonSolution solve_poisson(const Spectrum& s, const Matrix& b, double tol = kSolvabilityTol);

/// Worst ||solve(Lap a) - (a - mean(a))|| / ||a|| over random trace-free Hermitian a.
double poisson_roundtrip_check(const GeometryContext& ctx, const Spectrum& s, std::uint64_t seed,
                               std::size_t samples);

} // namespace mgeom
