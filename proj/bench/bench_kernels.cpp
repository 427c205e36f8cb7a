// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "mgeom/kernels.hpp"
#include "mgeom/random.hpp"
#include "mgeom/spectral.hpp"

using namespace mgeom;

namespace {

template <auto Gemm>
void bm_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = sample_engine(1, n);
  const Matrix a = random_complex(rng, n), b = random_complex(rng, n);
  Matrix c = Matrix::zeros(n);
  for (auto _ : state) {
    Gemm(n, a.data(), b.data(), c.data());
    benchmark::DoNotOptimize(c.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Gemv>
void bm_gemv(benchmark::State& state) {
  // Superoperator-sized: (n^2) x (n^2) acting on vec(a).
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = n * n;
  auto rng = sample_engine(2, n);
  const Matrix A = random_complex(rng, dim);
  const Matrix x = random_complex(rng, n);
  std::vector<cplx> y(dim);
  for (auto _ : state) {
    Gemv(dim, dim, A.data(), x.data(), y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim * dim));
}

void bm_heat_semigroup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = spectrum(make_context(n));
  const Matrix u0 = random_pd(std::uint64_t{3}, n, 0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(heat_semigroup_apply(s, 0.5, u0));
}

} // namespace

BENCHMARK(bm_gemm<kernels::serial::gemm>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_gemm<kernels::omp::gemm>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_gemv<kernels::serial::gemv>)->DenseRange(8, 32, 8);
BENCHMARK(bm_gemv<kernels::omp::gemv>)->DenseRange(8, 32, 8);
BENCHMARK(bm_gemv<kernels::serial::gemv_adjoint>)->DenseRange(8, 32, 8);
BENCHMARK(bm_gemv<kernels::omp::gemv_adjoint>)->DenseRange(8, 32, 8);
BENCHMARK(bm_heat_semigroup)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
