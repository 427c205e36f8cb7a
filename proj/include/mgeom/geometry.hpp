#pragma once

#include <string>
#include <variant>

#include "mgeom/matrix.hpp"

namespace mgeom {

/// Clock/shift pair: x = diag(0, ..., n-1), y = F x F* with F the unitary DFT.
struct ClockShift {};

/// User-supplied Hermitian generators.
struct CustomGenerators {
  Matrix x;
  Matrix y;
};

using GeneratorSpec = std::variant<ClockShift, CustomGenerators>;

/// Immutable matrix geometry: the Hermitian pair (x, y) and the unitaries
/// U = exp(2 pi i x / n), V = exp(2 pi i y / n).
class GeometryContext {
public:
  std::size_t n() const noexcept { return n_; }
  const Matrix& x() const noexcept { return x_; }
  const Matrix& y() const noexcept { return y_; }
  const Matrix& U() const noexcept { return U_; }
  const Matrix& V() const noexcept { return V_; }
  bool is_clock_shift() const noexcept { return clock_shift_; }
  std::string generator_name() const { return clock_shift_ ? "clock_shift" : "custom"; }

  /// (spread(x))^2 + (spread(y))^2, an upper bound for the Laplacian's operator norm.
  double laplacian_norm_bound() const noexcept { return norm_bound_; }

  /// Same geometry with the generators swapped.
  GeometryContext swapped() const;

  friend GeometryContext make_context(std::size_t n, const GeneratorSpec& spec);

private:
  GeometryContext() = default;
  static GeometryContext build(Matrix x, Matrix y, bool clock_shift);

  std::size_t n_ = 0;
  Matrix x_, y_, U_, V_;
  bool clock_shift_ = false;
  double norm_bound_ = 0.0;
};

/// Requires n >= 2. Custom generators must be n x n and Hermitian to 1e-12
/// (NotHermitian, DimensionMismatch otherwise). The commutant of a custom pair
/// is not checked here; see kernel_dimension().
GeometryContext make_context(std::size_t n, const GeneratorSpec& spec = ClockShift{});

/// delta1(a) = [y, a].
Matrix delta1(const GeometryContext& ctx, const Matrix& a);
/// delta2(a) = -[x, a].
Matrix delta2(const GeometryContext& ctx, const Matrix& a);

/// Laplacian in double-commutator form: [y, [y, a]] + [x, [x, a]].
/// Equals delta1* delta1 + delta2* delta2 under the Hilbert-Schmidt product,
/// hence positive semidefinite with kernel containing the scalars.
Matrix laplacian_apply(const GeometryContext& ctx, const Matrix& a);

/// ||delta1 a||^2 + ||delta2 a||^2.
double dirichlet_energy(const GeometryContext& ctx, const Matrix& a);

/// Laplacian as an n^2 x n^2 matrix on column-stacked vectors:
/// C_y^2 + C_x^2 with C_w = I (x) w - w^T (x) I.
struct Superoperator {
  std::size_t n = 0;
  std::size_t dim = 0;
  Matrix op;

  Matrix apply(const Matrix& a) const;
};

Superoperator assemble_superoperator(const GeometryContext& ctx);

/// tr(a^m Laplacian(a)) for Hermitian positive definite a and integer m >= 0.
/// Throws NotPositive if a is not positive definite, DomainError for m < 0.
double dirichlet_power_form(const GeometryContext& ctx, const Matrix& a, int m);

} // namespace mgeom
