#pragma once

#include <cstddef>
#include <vector>

#include "mgeom/geometry.hpp"
#include "mgeom/matrix.hpp"

namespace mgeom {

/// Eigenvalues below this fraction of the largest one are classified as kernel.
inline constexpr double kKernelRelTol = 1e-8;

/// Eigen-decomposition of the Laplacian of a geometry: ascending eigenvalues
/// and Hilbert-Schmidt orthonormal eigenmatrices. Immutable.
class Spectrum {
public:
  Spectrum(GeometryContext ctx, std::vector<double> eigenvalues, Matrix eigenvectors);

  const GeometryContext& context() const noexcept { return ctx_; }
  std::size_t n() const noexcept { return ctx_.n(); }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

  /// Columns are vec(phi_j) under column stacking.
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  Matrix eigenmatrix(std::size_t j) const;

  double lambda_max() const noexcept { return eigenvalues_.back(); }
  double kernel_tolerance() const noexcept { return kernel_tol_; }
  /// Number of eigenvalues at or below kernel_tolerance().
  std::size_t kernel_dimension() const noexcept { return kernel_dim_; }

  /// <phi_j, a> for every j.
  std::vector<cplx> coefficients(const Matrix& a) const;
  /// sum_j c_j phi_j.
  Matrix synthesize(const std::vector<cplx>& c) const;

private:
  GeometryContext ctx_;
  std::vector<double> eigenvalues_;
  Matrix eigenvectors_;
  double kernel_tol_ = 0.0;
  std::size_t kernel_dim_ = 0;
};

/// Diagonalizes the assembled superoperator. ConvergenceError on solver failure.
Spectrum spectrum(const GeometryContext& ctx);

/// Smallest eigenvalue above the kernel tolerance: the spectral gap on M_n / C I.
/// DomainError if every eigenvalue lies in the kernel.
double lambda1(const Spectrum& s);

/// Index of the eigenvalue returned by lambda1().
std::size_t lambda1_index(const Spectrum& s);

/// Re <a, Lap a> / <a, a>.
double rayleigh_quotient(const GeometryContext& ctx, const Matrix& a);

/// exp(-t Lap) a = sum_j exp(-lambda_j t) <phi_j, a> phi_j. DomainError for t < 0.
Matrix heat_semigroup_apply(const Spectrum& s, double t, const Matrix& a);

/// sum_j exp(-lambda_j t). DomainError for t < 0.
double heat_trace(const Spectrum& s, double t);

} // namespace mgeom
