#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgeom/geometry.hpp"
#include "mgeom/spectral.hpp"

namespace mgeom {

/// Per-state diagnostics. Optional fields are absent when the state leaves
/// the relevant domain (not Hermitian, not PSD, singular).
struct FlowDiagnostics {
  cplx trace;
  std::optional<double> min_eigenvalue;
  std::optional<double> log_det;
  std::optional<double> entropy;
  double dist_to_mean = 0.0; // ||u - mean(u0)||
};

struct FlowTrajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
  std::vector<FlowDiagnostics> diagnostics;
  /// Step size exceeded the RK4 real-axis stability bound.
  bool stability_warning = false;
};

/// RK4 is stable on the negative real axis for step * lambda <= this.
inline constexpr double kRk4StabilityBound = 2.785;

FlowDiagnostics flow_diagnostics(const Matrix& u, const Matrix& u0_mean);

/// Exact solution of u' = -Lap u sampled at `times` (ascending, >= 0).
FlowTrajectory heat_flow_exact(const Spectrum& s, const Matrix& u0, const std::vector<double>& times);

/// Classical RK4 on u' = -Lap u. Records step 0, every `record_stride` steps and
/// the final step. IntegrationError on a non-finite state.
FlowTrajectory heat_flow_rk4(const GeometryContext& ctx, const Matrix& u0, double step,
                             std::size_t steps, std::size_t record_stride);

/// Classical RK4 on c' = -Lap log c for positive definite c0. IntegrationError if
/// any stage loses positive definiteness or blows up.
FlowTrajectory log_laplacian_flow(const GeometryContext& ctx, const Matrix& c0, double step,
                                  std::size_t steps, std::size_t record_stride);

/// Largest eigenvalue of the Laplacian, from the assembled superoperator.
double laplacian_spectral_radius(const GeometryContext& ctx);

struct MonotonicityCheck {
  double worst_increment = 0.0; // min over consecutive pairs of value[k+1] - value[k]
  double tolerance = 0.0;
  bool pass = true;
};

/// Entropy must not decrease between recorded states (slack 1e-9 * max(1, |S|)).
/// NotPositive if a state is not PSD.
MonotonicityCheck entropy_monotonicity_check(const FlowTrajectory& traj);

/// log det must not decrease between recorded states (slack 1e-9 * max(1, |log det|)).
MonotonicityCheck log_det_monotonicity_check(const FlowTrajectory& traj);

struct StabilityRow {
  double t = 0.0;
  double hs_distance = 0.0;
  double trace_distance = 0.0;
  double eigenvalue_l1_gap = 0.0;
  double entropy_u = 0.0;
  double entropy_v = 0.0;
  double entropy_gap = 0.0;
  std::optional<double> fannes_bound;       // with the configured dimension
  std::optional<double> fannes_bound_dim_n; // with d = n
  double contraction_envelope = 0.0;        // ||u0 - v0|| exp(-lambda1 t)
};

struct StabilityReport {
  std::vector<StabilityRow> rows;
  std::size_t fannes_dim = 0;
  double lambda1 = 0.0;
  bool trace_matched = false;
  bool fannes_applicable = false;

  bool contraction_ok = true;
  bool trace_distance_monotone = true;
  bool fannes_ok = true; // vacuous when not applicable

  bool all_pass() const { return contraction_ok && trace_distance_monotone && fannes_ok; }
};

/// Evolves u0 and v0 (Hermitian PD, same dimension) with the exact semigroup and
/// checks the contraction envelope, trace-distance monotonicity and, for unit-trace
/// pairs with eigenvalue gap <= 1/e, the Fannes entropy bound.
/// fannes_dim = 0 selects n^2.
StabilityReport stability_experiment(const Spectrum& s, const Matrix& u0, const Matrix& v0,
                                     const std::vector<double>& times, std::size_t fannes_dim = 0);

// CSV writers. Absent values are empty cells; numbers use 17 significant digits.
std::string trajectory_to_csv(const FlowTrajectory& traj);
std::string stability_to_csv(const StabilityReport& report);

} // namespace mgeom
