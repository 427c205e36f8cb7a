#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgeom/geometry.hpp"
#include "mgeom/matrix.hpp"

namespace mgeom::cli {

/// Seeded random positive definite start, optionally normalized to unit trace.
struct RandomPdSource {
  double min_eig = 0.1;
  double scale = 1.0;
  bool unit_trace = false;
};

/// Where an input matrix comes from: a Matrix JSON file, an inline Matrix
/// JSON object, or a random generator.
using MatrixSource = std::variant<std::filesystem::path, Matrix, RandomPdSource>;

struct FlowBlock {
  std::optional<MatrixSource> u0;
  double t_max = 10.0;
  std::optional<double> step; // default 0.1 / lambda_max
  std::size_t record_stride = 10;
  std::string method = "exact"; // heat only: exact | rk4
  std::vector<double> dump_times;
};

struct StabilityBlock {
  std::optional<MatrixSource> u0, v0;
  std::vector<double> times; // default: 21 points on [0, 10 / lambda1]
  std::size_t fannes_dim = 0;  // 0 selects n^2
};

struct ExperimentConfig {
  std::size_t n = 0;
  GeneratorSpec generators = ClockShift{};
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";

  std::size_t props_samples = 100;
  double props_tolerance = 1e-9;
  bool dump_eigenmatrices = false;
  std::optional<MatrixSource> poisson_b;
  FlowBlock flow;
  StabilityBlock stability;
};

/// Parses and validates a config document. Relative paths resolve against
/// `base_dir`. Throws ConfigError.
ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Materializes a source; `stream` separates the random streams of u0 and v0.
Matrix resolve_matrix(const MatrixSource& source, std::size_t n, std::uint64_t seed,
                      std::uint64_t stream);

} // namespace mgeom::cli
