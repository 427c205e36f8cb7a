#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mgeom {

using cplx = std::complex<double>;

/// Dense n x n complex matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<cplx> entries);
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix zeros(std::size_t n) { return Matrix(n); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  static Matrix diagonal(std::initializer_list<double> d);
  /// Elementary matrix E_{ij}: one at (i, j), zero elsewhere.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  /// Frobenius (Hilbert-Schmidt) norm.
  double norm() const;
  bool is_finite() const;
  /// ||a - a*||, the Frobenius size of the anti-Hermitian part times two.
  double hermiticity_violation() const;
  /// (a + a*) / 2.
  Matrix hermitian_part() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  Matrix& operator*=(cplx s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, cplx s);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

void require_same_dim(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization: vec(a)[i + j n] = a(i, j).
std::vector<cplx> vec(const Matrix& a);
Matrix unvec(std::span<const cplx> v, std::size_t n);

/// Pauli matrices, handy for 2 x 2 tests and examples.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

} // namespace mgeom
