#include "mgeom/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/parallel.hpp"
#include "mgeom/random.hpp"

namespace mgeom {

bool is_solvable(const Matrix& b, double tol) {
  return std::abs(b.trace()) <= tol * std::max(1.0, b.norm());
}

PoissonSolution solve_poisson(const Spectrum& s, const Matrix& b, double tol) {
  if (b.n() != s.n()) throw DimensionMismatch(s.n(), b.n());
  if (s.kernel_dimension() > 1) throw DegenerateGeometry(s.kernel_dimension());
  if (!is_solvable(b, tol)) throw NotSolvable(std::abs(b.trace()));

  auto c = s.coefficients(b);
  const auto& ev = s.eigenvalues();
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = ev[j] > s.kernel_tolerance() ? c[j] / ev[j] : cplx{0.0, 0.0};

  PoissonSolution out;
  out.solution = s.synthesize(c);
  out.residual = (laplacian_apply(s.context(), out.solution) - b).norm() / std::max(1.0, b.norm());
  out.projected_source_norm = (b - mean_part(b)).norm();
  return out;
}

double poisson_roundtrip_check(const GeometryContext& ctx, const Spectrum& s, std::uint64_t seed,
                               std::size_t samples) {
  if (samples < 1) throw DomainError("poisson_roundtrip_check requires samples >= 1");
  std::vector<double> errors(samples, 0.0);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = sample_engine(seed, i);
    const Matrix a = random_traceless_hermitian(rng, ctx.n());
    const auto sol = solve_poisson(s, laplacian_apply(ctx, a));
    errors[i] = (sol.solution - (a - mean_part(a))).norm() / a.norm();
  });
  return *std::max_element(errors.begin(), errors.end());
}

} // namespace mgeom
