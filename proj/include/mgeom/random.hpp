#pragma once

#include <cstdint>
#include <random>

#include "mgeom/matrix.hpp"

namespace mgeom {

/// Engine for sample `index` of a seeded experiment; independent of how the
/// samples are scheduled across threads.
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

/// Complex Gaussian entries, variance scale^2 per real component.
Matrix random_complex(std::mt19937_64& rng, std::size_t n, double scale = 1.0);

/// (g + g*) / 2 of a random complex g; exactly Hermitian.
Matrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0);
Matrix random_hermitian(std::uint64_t seed, std::size_t n, double scale = 1.0);

/// Hermitian with zero trace.
Matrix random_traceless_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0);

/// u = exp(h) + min_eig I where h is random Hermitian rescaled to spectral
/// radius `scale`. Eigenvalues lie in [e^-scale + min_eig, e^scale + min_eig].
Matrix random_pd(std::mt19937_64& rng, std::size_t n, double min_eig, double scale);
Matrix random_pd(std::uint64_t seed, std::size_t n, double min_eig, double scale);

/// random_pd divided by its trace.
Matrix random_density(std::mt19937_64& rng, std::size_t n, double min_eig = 0.05,
                      double scale = 1.5);

} // namespace mgeom
