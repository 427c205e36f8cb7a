#pragma once

#include <cstddef>
#include <vector>

#include "mgeom/matrix.hpp"

namespace mgeom {

/// <a, b> = tr(a* b). Conjugate-linear in the first slot.
cplx hs_inner(const Matrix& a, const Matrix& b);
double hs_norm(const Matrix& a);

/// (tr(a) / n) I.
Matrix mean_part(const Matrix& a);

/// Negative eigenvalues down to -kPsdSlack * ||u|| are treated as zero.
inline constexpr double kPsdSlack = 1e-12;

/// S(u) = -tr(u log u), natural log, 0 log 0 = 0. Throws NotPositive for u not PSD.
double von_neumann_entropy(const Matrix& u);
double von_neumann_entropy(const std::vector<double>& eigenvalues, double scale);

/// Sum of |eigenvalues| of (a - b); no factor 1/2.
double trace_distance(const Matrix& a, const Matrix& b);

/// sum_i |r_i - s_i| over the ascending spectra of a and b.
double eigenvalue_l1_gap(const Matrix& a, const Matrix& b);

/// eta(s) = -s log s on [0, 1], eta(0) = 0.
double eta(double s);

/// Fannes right-hand side: gap * log(dim) + eta(gap). Requires 0 <= gap <= 1.
double fannes_bound(double gap, std::size_t dim);

} // namespace mgeom
