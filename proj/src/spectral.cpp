#include "mgeom/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/kernels.hpp"
#include "mgeom/linalg.hpp"

namespace mgeom {

Spectrum::Spectrum(GeometryContext ctx, std::vector<double> eigenvalues, Matrix eigenvectors)
    : ctx_(std::move(ctx)), eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {
  if (eigenvalues_.size() != ctx_.n() * ctx_.n() || eigenvectors_.n() != eigenvalues_.size())
    throw DimensionMismatch(ctx_.n() * ctx_.n(), eigenvalues_.size());
  kernel_tol_ = kKernelRelTol * std::max(std::abs(eigenvalues_.back()), 0.0);
  kernel_dim_ = static_cast<std::size_t>(
      std::count_if(eigenvalues_.begin(), eigenvalues_.end(),
                    [this](double l) { return l <= kernel_tol_; }));
}

Matrix Spectrum::eigenmatrix(std::size_t j) const {
  const std::size_t dim = size();
  std::vector<cplx> column(dim);
  for (std::size_t k = 0; k < dim; ++k) column[k] = eigenvectors_(k, j);
  return unvec(column, n());
}

std::vector<cplx> Spectrum::coefficients(const Matrix& a) const {
  if (a.n() != n()) throw DimensionMismatch(n(), a.n());
  const auto v = vec(a);
  std::vector<cplx> c(size());
  kernels::gemv_adjoint(size(), size(), eigenvectors_.data(), v, c);
  return c;
}

Matrix Spectrum::synthesize(const std::vector<cplx>& c) const {
  if (c.size() != size()) throw DimensionMismatch(size(), c.size());
  std::vector<cplx> v(size());
  kernels::gemv(size(), size(), eigenvectors_.data(), c, v);
  return unvec(v, n());
}

Spectrum spectrum(const GeometryContext& ctx) {
  const auto sup = assemble_superoperator(ctx);
  auto d = hermitian_eig(sup.op);
  return Spectrum(ctx, std::move(d.eigenvalues), std::move(d.eigenvectors));
}

std::size_t lambda1_index(const Spectrum& s) {
  const auto& ev = s.eigenvalues();
  const auto it = std::find_if(ev.begin(), ev.end(),
                               [&](double l) { return l > s.kernel_tolerance(); });
  if (it == ev.end()) throw DomainError("spectral gap undefined: every eigenvalue is in the kernel");
  return static_cast<std::size_t>(it - ev.begin());
}

double lambda1(const Spectrum& s) { return s.eigenvalues()[lambda1_index(s)]; }

double rayleigh_quotient(const GeometryContext& ctx, const Matrix& a) {
  return hs_inner(a, laplacian_apply(ctx, a)).real() / hs_inner(a, a).real();
}

Matrix heat_semigroup_apply(const Spectrum& s, double t, const Matrix& a) {
  if (!(t >= 0.0)) throw DomainError("heat semigroup requires t >= 0");
  if (t == 0.0) {
    if (a.n() != s.n()) throw DimensionMismatch(s.n(), a.n());
    return a;
  }
  auto c = s.coefficients(a);
  const auto& ev = s.eigenvalues();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= std::exp(-std::max(ev[j], 0.0) * t);
  return s.synthesize(c);
}

double heat_trace(const Spectrum& s, double t) {
  if (!(t >= 0.0)) throw DomainError("heat trace requires t >= 0");
  double sum = 0.0;
  for (double l : s.eigenvalues()) sum += std::exp(-std::max(l, 0.0) * t);
  return sum;
}

} // namespace mgeom
