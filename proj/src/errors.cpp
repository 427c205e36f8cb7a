#include "mgeom/errors.hpp"

#include <cstdio>

namespace mgeom {

namespace {
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
} // namespace

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
      lhs_(lhs), rhs_(rhs) {}

NotHermitian::NotHermitian(double violation)
    : Error("matrix is not Hermitian: ||a - a*|| = " + fmt_double(violation)),
      violation_(violation) {}

NotPositive::NotPositive(const std::string& what, double eigenvalue)
    : Error(what + ": eigenvalue " + fmt_double(eigenvalue)), eigenvalue_(eigenvalue) {}

NotSolvable::NotSolvable(double trace_abs)
    : Error("not solvable: trace = " + fmt_double(trace_abs)), trace_abs_(trace_abs) {}

DegenerateGeometry::DegenerateGeometry(std::size_t kernel_dim)
    : Error("degenerate geometry: Laplacian kernel has dimension " + std::to_string(kernel_dim)),
      kernel_dim_(kernel_dim) {}

IntegrationError::IntegrationError(const std::string& what, long step)
    : Error(what + " at step " + std::to_string(step)), step_(step) {}

} // namespace mgeom
