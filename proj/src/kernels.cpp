#include "mgeom/kernels.hpp"

#include <cassert>

#ifdef MGEOM_HAVE_OPENMP
#include <omp.h>
#endif

namespace mgeom::kernels {

namespace {

// Inner products are formed with explicit real arithmetic: std::complex
// multiplication carries NaN-recovery branches that block vectorization.
inline void mul_acc(cplx& acc, const cplx& a, const cplx& b) {
  acc = {acc.real() + a.real() * b.real() - a.imag() * b.imag(),
         acc.imag() + a.real() * b.imag() + a.imag() * b.real()};
}

inline void conj_mul_acc(cplx& acc, const cplx& a, const cplx& b) {
  acc = {acc.real() + a.real() * b.real() + a.imag() * b.imag(),
         acc.imag() + a.real() * b.imag() - a.imag() * b.real()};
}

// One output row of c = a b; i-k-j order so b is streamed row-wise.
inline void gemm_row(std::size_t n, std::size_t i, const cplx* a, const cplx* b, cplx* c) {
  cplx* crow = c + i * n;
  for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx aik = a[i * n + k];
    const cplx* brow = b + k * n;
    for (std::size_t j = 0; j < n; ++j) mul_acc(crow[j], aik, brow[j]);
  }
}

inline cplx gemv_row(std::size_t cols, std::size_t i, const cplx* A, const cplx* x) {
  cplx acc = 0.0;
  const cplx* row = A + i * cols;
  for (std::size_t j = 0; j < cols; ++j) mul_acc(acc, row[j], x[j]);
  return acc;
}

inline cplx gemv_adjoint_entry(std::size_t rows, std::size_t cols, std::size_t j, const cplx* A,
                               const cplx* x) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rows; ++i) conj_mul_acc(acc, A[i * cols + j], x[i]);
  return acc;
}

} // namespace

namespace serial {

void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
  assert(a.size() == n * n && b.size() == n * n && c.size() == n * n);
  for (std::size_t i = 0; i < n; ++i) gemm_row(n, i, a.data(), b.data(), c.data());
}

void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y) {
  assert(A.size() == rows * cols && x.size() == cols && y.size() == rows);
  for (std::size_t i = 0; i < rows; ++i) y[i] = gemv_row(cols, i, A.data(), x.data());
}

void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y) {
  assert(A.size() == rows * cols && x.size() == rows && y.size() == cols);
  for (std::size_t j = 0; j < cols; ++j)
    y[j] = gemv_adjoint_entry(rows, cols, j, A.data(), x.data());
}

} // namespace serial

namespace omp {

void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
  assert(a.size() == n * n && b.size() == n * n && c.size() == n * n);
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i)
    gemm_row(n, static_cast<std::size_t>(i), a.data(), b.data(), c.data());
}

void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y) {
  assert(A.size() == rows * cols && x.size() == cols && y.size() == rows);
  const long r = static_cast<long>(rows);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < r; ++i)
    y[static_cast<std::size_t>(i)] = gemv_row(cols, static_cast<std::size_t>(i), A.data(), x.data());
}

void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y) {
  assert(A.size() == rows * cols && x.size() == rows && y.size() == cols);
  const long c = static_cast<long>(cols);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < c; ++j)
    y[static_cast<std::size_t>(j)] =
        gemv_adjoint_entry(rows, cols, static_cast<std::size_t>(j), A.data(), x.data());
}

} // namespace omp

namespace {
// Below this many complex multiply-adds the thread fork costs more than it saves.
constexpr std::size_t kParallelWork = 1u << 15;
} // namespace

void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
  if (openmp_enabled() && n * n * n >= kParallelWork)
    omp::gemm(n, a, b, c);
  else
    serial::gemm(n, a, b, c);
}

void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y) {
  if (openmp_enabled() && rows * cols >= kParallelWork)
    omp::gemv(rows, cols, A, x, y);
  else
    serial::gemv(rows, cols, A, x, y);
}

void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y) {
  if (openmp_enabled() && rows * cols >= kParallelWork)
    omp::gemv_adjoint(rows, cols, A, x, y);
  else
    serial::gemv_adjoint(rows, cols, A, x, y);
}

bool openmp_enabled() noexcept {
#ifdef MGEOM_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef MGEOM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace mgeom::kernels
