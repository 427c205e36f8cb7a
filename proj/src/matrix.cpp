#include "mgeom/matrix.hpp"

#include <cmath>
#include <utility>

#include "mgeom/errors.hpp"
#include "mgeom/kernels.hpp"

namespace mgeom {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, cplx{0.0, 0.0}) {}

Matrix::Matrix(std::size_t n, std::vector<cplx> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) throw DimensionMismatch(n * n, data_.size());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch(n_, row.size());
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n);
  m(i, j) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::is_finite() const {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double Matrix::hermiticity_violation() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

Matrix Matrix::hermitian_part() const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  require_same_dim(*this, b);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  require_same_dim(*this, b);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(Matrix a, cplx s) { return a *= s; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.n());
  kernels::gemm(a.n(), a.data(), b.data(), c.data());
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
}

std::vector<cplx> vec(const Matrix& a) {
  const std::size_t n = a.n();
  std::vector<cplx> v(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) v[i + j * n] = a(i, j);
  return v;
}

Matrix unvec(std::span<const cplx> v, std::size_t n) {
  if (v.size() != n * n) throw DimensionMismatch(n * n, v.size());
  Matrix a(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = v[i + j * n];
  return a;
}

Matrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
Matrix pauli_y() { return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
Matrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

} // namespace mgeom
