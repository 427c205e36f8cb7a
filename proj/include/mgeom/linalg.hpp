#pragma once

#include <functional>
#include <vector>

#include "mgeom/matrix.hpp"

namespace mgeom {

/// Eigen-decomposition of a Hermitian matrix: a = V diag(eigenvalues) V*.
struct HermitianDecomposition {
  std::vector<double> eigenvalues; // ascending
  Matrix eigenvectors;             // unitary, column k pairs with eigenvalues[k]

  Matrix reconstruct() const;
};

/// Relative Hermiticity slack accepted by hermitian_eig and everything built on it.
inline constexpr double kHermitianTol = 1e-10;

/// Cyclic complex Jacobi eigensolver. Deterministic; eigenvalues ascending.
/// Throws NotHermitian when ||a - a*|| > kHermitianTol * max(1, ||a||),
/// ConvergenceError if the sweep cap is hit.
HermitianDecomposition hermitian_eig(const Matrix& a);

/// Eigenvalues only (same algorithm, ascending).
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/// Scalar functions that can be lifted to Hermitian matrices.
struct ScalarFunction {
  enum class Kind { log, exp, power };
  Kind kind = Kind::exp;
  double exponent = 1.0; // for Kind::power

  static ScalarFunction log() { return {Kind::log, 0.0}; }
  static ScalarFunction exp() { return {Kind::exp, 0.0}; }
  static ScalarFunction power(double p) { return {Kind::power, p}; }
};

/// V diag(f(lambda)) V*. log requires every eigenvalue > 0 (NotPositive otherwise);
/// fractional powers require eigenvalues >= 0, negative powers eigenvalues > 0.
Matrix matrix_function(const Matrix& a, ScalarFunction f);
Matrix matrix_function(const HermitianDecomposition& d, ScalarFunction f);

/// V diag(values) V* for an arbitrary real spectrum.
Matrix compose(const Matrix& eigenvectors, const std::vector<double>& values);

inline Matrix matrix_log(const Matrix& a) { return matrix_function(a, ScalarFunction::log()); }
inline Matrix matrix_exp(const Matrix& a) { return matrix_function(a, ScalarFunction::exp()); }

/// exp(i s h) for Hermitian h; used for the unitaries of a geometry.
Matrix unitary_exp(const Matrix& h, double s);

} // namespace mgeom
