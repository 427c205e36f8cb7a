#include "mgeom/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"

namespace mgeom {

cplx hs_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  // tr(a* b) = sum_ij conj(a_ij) b_ij
  cplx acc = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) acc += std::conj(da[k]) * db[k];
  return acc;
}

double hs_norm(const Matrix& a) { return a.norm(); }

Matrix mean_part(const Matrix& a) {
  const double n = static_cast<double>(a.n());
  return Matrix::identity(a.n()) * (a.trace() / n);
}

double von_neumann_entropy(const std::vector<double>& eigenvalues, double scale) {
  const double tol = kPsdSlack * std::max(1.0, scale);
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -tol) throw NotPositive("entropy of a matrix that is not positive semidefinite", l);
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

double von_neumann_entropy(const Matrix& u) {
  return von_neumann_entropy(hermitian_eigenvalues(u), u.norm());
}

double trace_distance(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  double t = 0.0;
  for (double mu : hermitian_eigenvalues(a - b)) t += std::abs(mu);
  return t;
}

double eigenvalue_l1_gap(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const auto r = hermitian_eigenvalues(a);
  const auto s = hermitian_eigenvalues(b);
  double gap = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) gap += std::abs(r[i] - s[i]);
  return gap;
}

double eta(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("eta(s) requires 0 <= s <= 1");
  return s > 0.0 ? -s * std::log(s) : 0.0;
}

double fannes_bound(double gap, std::size_t dim) {
  if (dim < 1) throw DomainError("Fannes dimension must be positive");
  return gap * std::log(static_cast<double>(dim)) + eta(gap);
}

} // namespace mgeom
