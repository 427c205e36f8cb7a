#pragma once

// Dense complex kernels behind Matrix products, superoperator assembly and
// spectral expansions. Two implementations share one contract:
//
//   serial::  reference loops, kept for testing and benchmarking;
//   omp::     the same loops with the outer index split across threads.
//
// Every output element is accumulated by one thread in the same order as the
// serial loop, so both variants return bitwise-identical results for any
// thread count. The unqualified entry points dispatch to omp:: when the
// library is built with OpenMP.

#include <complex>
#include <cstddef>
#include <span>

namespace mgeom::kernels {

using cplx = std::complex<double>;

namespace serial {
// c = a b, all n x n row-major.
void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
// y = A x, A is rows x cols row-major.
void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y);
// y = A^H x.
void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y);
} // namespace serial

namespace omp {
void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y);
void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y);
} // namespace omp

void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
void gemv(std::size_t rows, std::size_t cols, std::span<const cplx> A, std::span<const cplx> x,
          std::span<cplx> y);
void gemv_adjoint(std::size_t rows, std::size_t cols, std::span<const cplx> A,
                  std::span<const cplx> x, std::span<cplx> y);

/// True when the omp:: variants actually run in parallel.
bool openmp_enabled() noexcept;
int max_threads() noexcept;

} // namespace mgeom::kernels
