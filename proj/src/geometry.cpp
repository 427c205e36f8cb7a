#include "mgeom/geometry.hpp"

#include <cmath>
#include <numbers>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/kernels.hpp"
#include "mgeom/linalg.hpp"

namespace mgeom {

namespace {

constexpr double kGeneratorHermitianTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

void require_hermitian_generator(const Matrix& w) {
  const double viol = w.hermiticity_violation();
  if (!(viol <= kGeneratorHermitianTol * std::max(1.0, w.norm()))) throw NotHermitian(viol);
}

double spread(const Matrix& w) {
  const auto ev = hermitian_eigenvalues(w);
  return ev.back() - ev.front();
}

Matrix clock_generator(std::size_t n) {
  std::vector<double> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = static_cast<double>(k);
  return Matrix::diagonal(d);
}

// y = F x F* with F_{jk} = exp(2 pi i j k / n) / sqrt(n):
// y_{ab} = (1/n) sum_k k exp(2 pi i (a - b) k / n).
Matrix shift_generator(std::size_t n) {
  Matrix y(n);
  const double nn = static_cast<double>(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const long phase_index = static_cast<long>(((a + n - b) % n) * k % n);
        acc += static_cast<double>(k) *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase_index) / nn);
      }
      acc /= nn;
      if (a == b) {
        y(a, a) = acc.real();
      } else {
        y(a, b) = acc;
        y(b, a) = std::conj(acc);
      }
    }
  }
  return y;
}

double unitarity_violation(const Matrix& u) {
  return (u.adjoint() * u - Matrix::identity(u.n())).norm();
}

} // namespace

GeometryContext GeometryContext::build(Matrix x, Matrix y, bool clock_shift) {
  GeometryContext ctx;
  ctx.n_ = x.n();
  const double s = 2.0 * std::numbers::pi / static_cast<double>(ctx.n_);
  ctx.U_ = unitary_exp(x, s);
  ctx.V_ = unitary_exp(y, s);
  const double viol = std::max(unitarity_violation(ctx.U_), unitarity_violation(ctx.V_));
  if (!(viol <= kUnitaryTol))
    throw ConvergenceError("generator exponentials are not unitary to 1e-10");
  ctx.norm_bound_ = std::pow(spread(x), 2) + std::pow(spread(y), 2);
  ctx.x_ = std::move(x);
  ctx.y_ = std::move(y);
  ctx.clock_shift_ = clock_shift;
  return ctx;
}

GeometryContext GeometryContext::swapped() const {
  GeometryContext ctx = *this;
  std::swap(ctx.x_, ctx.y_);
  std::swap(ctx.U_, ctx.V_);
  return ctx;
}

GeometryContext make_context(std::size_t n, const GeneratorSpec& spec) {
  if (n < 2) throw DomainError("geometry dimension must be >= 2");
  if (std::holds_alternative<ClockShift>(spec))
    return GeometryContext::build(clock_generator(n), shift_generator(n), true);

  const auto& custom = std::get<CustomGenerators>(spec);
  if (custom.x.n() != n) throw DimensionMismatch(n, custom.x.n());
  if (custom.y.n() != n) throw DimensionMismatch(n, custom.y.n());
  if (!custom.x.is_finite() || !custom.y.is_finite())
    throw DomainError("generators must have finite entries");
  require_hermitian_generator(custom.x);
  require_hermitian_generator(custom.y);
  return GeometryContext::build(custom.x.hermitian_part(), custom.y.hermitian_part(), false);
}

Matrix delta1(const GeometryContext& ctx, const Matrix& a) {
  require_same_dim(ctx.y(), a);
  return commutator(ctx.y(), a);
}

Matrix delta2(const GeometryContext& ctx, const Matrix& a) {
  require_same_dim(ctx.x(), a);
  return -commutator(ctx.x(), a);
}

Matrix laplacian_apply(const GeometryContext& ctx, const Matrix& a) {
  require_same_dim(ctx.x(), a);
  return commutator(ctx.y(), commutator(ctx.y(), a)) + commutator(ctx.x(), commutator(ctx.x(), a));
}

double dirichlet_energy(const GeometryContext& ctx, const Matrix& a) {
  const double d1 = delta1(ctx, a).norm();
  const double d2 = delta2(ctx, a).norm();
  return d1 * d1 + d2 * d2;
}

namespace {

// C_w = I (x) w - w^T (x) I in the column-stacking convention:
// row i + j n, column k + l n  ->  delta_jl w_ik - w_lj delta_ik.
Matrix commutator_superoperator(const Matrix& w) {
  const std::size_t n = w.n();
  Matrix c(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          cplx v = 0.0;
          if (j == l) v += w(i, k);
          if (i == k) v -= w(l, j);
          c(i + j * n, k + l * n) = v;
        }
  return c;
}

} // namespace

Superoperator assemble_superoperator(const GeometryContext& ctx) {
  const Matrix cx = commutator_superoperator(ctx.x());
  const Matrix cy = commutator_superoperator(ctx.y());
  Superoperator s;
  s.n = ctx.n();
  s.dim = ctx.n() * ctx.n();
  s.op = cy * cy + cx * cx;
  return s;
}

Matrix Superoperator::apply(const Matrix& a) const {
  if (a.n() != n) throw DimensionMismatch(n, a.n());
  const auto v = vec(a);
  std::vector<cplx> out(dim);
  kernels::gemv(dim, dim, op.data(), v, out);
  return unvec(out, n);
}

double dirichlet_power_form(const GeometryContext& ctx, const Matrix& a, int m) {
  require_same_dim(ctx.x(), a);
  if (m < 0) throw DomainError("dirichlet_power_form requires m >= 0");
  const auto d = hermitian_eig(a);
  if (!(d.eigenvalues.front() > 0.0))
    throw NotPositive("dirichlet_power_form requires a positive definite matrix",
                      d.eigenvalues.front());
  std::vector<double> powers(d.eigenvalues.size());
  for (std::size_t k = 0; k < powers.size(); ++k) powers[k] = std::pow(d.eigenvalues[k], m);
  const Matrix am = compose(d.eigenvectors, powers);
  return (am * laplacian_apply(ctx, a)).trace().real();
}

} // namespace mgeom
