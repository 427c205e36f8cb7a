#include "mgeom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mgeom/errors.hpp"

namespace mgeom {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void check_hermitian(const Matrix& a) {
  const double viol = a.hermiticity_violation();
  if (!(viol <= kHermitianTol * std::max(1.0, a.norm()))) throw NotHermitian(viol);
}

// Zero a(p, q) with the unitary W = D P, where D removes the phase of a(p, q)
// and P is the real Jacobi rotation of the resulting real symmetric 2 x 2 block.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.n();
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  const cplx phase_conj = std::conj(apq) / g;

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;

  const cplx wpp = c, wpq = s, wqp = -s * phase_conj, wqq = c * phase_conj;

  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * wpp + akq * wqp;
    a(k, q) = akp * wpq + akq * wqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
    a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * wpp + vkq * wqp;
    v(k, q) = vkp * wpq + vkq * wqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

HermitianDecomposition jacobi(const Matrix& input) {
  const std::size_t n = input.n();
  Matrix a = input.hermitian_part();
  Matrix v = Matrix::identity(n);

  const double scale = a.norm();
  if (scale > 0.0) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double stop = static_cast<double>(n) * eps * scale;
    const double negligible = eps * scale / static_cast<double>(n * n);
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      if (off_diagonal_norm(a) <= stop) break;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (std::abs(a(p, q)) > negligible) rotate(a, v, p, q);
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) > stop)
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianDecomposition d{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) d.eigenvectors(i, k) = v(i, order[k]);
  }
  return d;
}

double apply_scalar(double lambda, ScalarFunction f) {
  switch (f.kind) {
  case ScalarFunction::Kind::log:
    if (!(lambda > 0.0)) throw NotPositive("logarithm of a matrix that is not positive definite", lambda);
    return std::log(lambda);
  case ScalarFunction::Kind::exp:
    return std::exp(lambda);
  case ScalarFunction::Kind::power: {
    const double p = f.exponent;
    const bool integral = std::floor(p) == p;
    if (p < 0.0 && !(lambda > 0.0))
      throw NotPositive("negative power of a singular matrix", lambda);
    if (!integral && lambda < 0.0)
      throw NotPositive("fractional power of a matrix with a negative eigenvalue", lambda);
    return std::pow(lambda, p);
  }
  }
  return lambda;
}

} // namespace

Matrix HermitianDecomposition::reconstruct() const { return compose(eigenvectors, eigenvalues); }

HermitianDecomposition hermitian_eig(const Matrix& a) {
  check_hermitian(a);
  return jacobi(a);
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) { return hermitian_eig(a).eigenvalues; }

Matrix compose(const Matrix& eigenvectors, const std::vector<double>& values) {
  const std::size_t n = eigenvectors.n();
  if (values.size() != n) throw DimensionMismatch(n, values.size());
  Matrix scaled = eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= values[k];
  return scaled * eigenvectors.adjoint();
}

Matrix matrix_function(const HermitianDecomposition& d, ScalarFunction f) {
  std::vector<double> values(d.eigenvalues.size());
  std::transform(d.eigenvalues.begin(), d.eigenvalues.end(), values.begin(),
                 [f](double l) { return apply_scalar(l, f); });
  return compose(d.eigenvectors, values);
}

Matrix matrix_function(const Matrix& a, ScalarFunction f) {
  return matrix_function(hermitian_eig(a), f);
}

Matrix unitary_exp(const Matrix& h, double s) {
  const auto d = hermitian_eig(h);
  const std::size_t n = h.n();
  Matrix scaled = d.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx phase = std::polar(1.0, s * d.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= phase;
  }
  return scaled * d.eigenvectors.adjoint();
}

} // namespace mgeom
