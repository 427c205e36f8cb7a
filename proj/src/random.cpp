#include "mgeom/random.hpp"

#include <algorithm>
#include <cmath>

#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"

namespace mgeom {

namespace {
void require_valid(std::size_t n, double scale) {
  if (n < 1) throw ConfigError("random matrix dimension must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw ConfigError("random matrix scale must be > 0");
}
} // namespace

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Matrix random_complex(std::mt19937_64& rng, std::size_t n, double scale) {
  require_valid(n, scale);
  std::normal_distribution<double> normal(0.0, scale);
  Matrix g(n);
  for (auto& z : g.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return g;
}

Matrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale) {
  const Matrix g = random_complex(rng, n, scale);
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

Matrix random_hermitian(std::uint64_t seed, std::size_t n, double scale) {
  auto rng = sample_engine(seed, 0);
  return random_hermitian(rng, n, scale);
}

Matrix random_traceless_hermitian(std::mt19937_64& rng, std::size_t n, double scale) {
  Matrix h = random_hermitian(rng, n, scale);
  const cplx shift = h.trace() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = (h(i, i) - shift).real();
  return h;
}

Matrix random_pd(std::mt19937_64& rng, std::size_t n, double min_eig, double scale) {
  require_valid(n, scale);
  if (!(min_eig > 0.0)) throw ConfigError("random_pd requires min_eig > 0");
  const auto d = hermitian_eig(random_hermitian(rng, n));
  double radius = 0.0;
  for (double l : d.eigenvalues) radius = std::max(radius, std::abs(l));
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double l = radius > 0.0 ? d.eigenvalues[k] * scale / radius : 0.0;
    values[k] = std::exp(l) + min_eig;
  }
  return compose(d.eigenvectors, values).hermitian_part();
}

Matrix random_pd(std::uint64_t seed, std::size_t n, double min_eig, double scale) {
  auto rng = sample_engine(seed, 0);
  return random_pd(rng, n, min_eig, scale);
}

Matrix random_density(std::mt19937_64& rng, std::size_t n, double min_eig, double scale) {
  Matrix u = random_pd(rng, n, min_eig, scale);
  return u * (1.0 / u.trace().real());
}

} // namespace mgeom
