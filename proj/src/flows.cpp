#include "mgeom/flows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"
#include "mgeom/parallel.hpp"

namespace mgeom {

namespace {

void require_times(const std::vector<double>& times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || !std::isfinite(times[k]))
      throw DomainError("flow times must be finite and nonnegative");
    if (k > 0 && times[k] < times[k - 1]) throw DomainError("flow times must be ascending");
  }
}

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive and finite");
}

// PD check shared by the stability experiment and the log flow.
void require_positive_definite(const Matrix& a, const char* what) {
  const auto ev = hermitian_eigenvalues(a);
  if (!(ev.front() > 0.0)) throw NotPositive(what, ev.front());
}

template <class Rhs>
Matrix rk4_step(const Matrix& u, double h, Rhs&& rhs) {
  const Matrix k1 = rhs(u);
  const Matrix k2 = rhs(u + k1 * (0.5 * h));
  const Matrix k3 = rhs(u + k2 * (0.5 * h));
  const Matrix k4 = rhs(u + k3 * h);
  return u + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

template <class Rhs>
FlowTrajectory integrate(const Matrix& u0, double step, std::size_t steps, std::size_t stride,
                         Rhs&& rhs) {
  require_step(step);
  if (stride < 1) throw DomainError("record_stride must be >= 1");
  const Matrix target = mean_part(u0);
  FlowTrajectory traj;
  auto record = [&](std::size_t k, const Matrix& u) {
    traj.times.push_back(static_cast<double>(k) * step);
    traj.states.push_back(u);
    traj.diagnostics.push_back(flow_diagnostics(u, target));
  };

  Matrix u = u0;
  record(0, u);
  for (std::size_t k = 1; k <= steps; ++k) {
    u = rk4_step(u, step, [&](const Matrix& stage) { return rhs(stage, static_cast<long>(k)); });
    if (!u.is_finite()) throw IntegrationError("non-finite state", static_cast<long>(k));
    if (k % stride == 0 || k == steps) record(k, u);
  }
  return traj;
}

double worst_increment(const std::vector<double>& values) {
  double worst = 0.0;
  for (std::size_t k = 1; k < values.size(); ++k) worst = std::min(worst, values[k] - values[k - 1]);
  return worst;
}

MonotonicityCheck monotone(const std::vector<double>& values) {
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  MonotonicityCheck out;
  out.worst_increment = worst_increment(values);
  out.tolerance = 1e-9 * scale;
  out.pass = out.worst_increment >= -out.tolerance;
  return out;
}

} // namespace

FlowDiagnostics flow_diagnostics(const Matrix& u, const Matrix& u0_mean) {
  FlowDiagnostics d;
  d.trace = u.trace();
  d.dist_to_mean = (u - u0_mean).norm();
  if (u.hermiticity_violation() > kHermitianTol * std::max(1.0, u.norm())) return d;

  const auto ev = hermitian_eigenvalues(u);
  d.min_eigenvalue = ev.front();
  if (ev.front() > 0.0) {
    double log_det = 0.0;
    for (double l : ev) log_det += std::log(l);
    d.log_det = log_det;
  }
  try {
    d.entropy = von_neumann_entropy(ev, u.norm());
  } catch (const NotPositive&) {
  }
  return d;
}

FlowTrajectory heat_flow_exact(const Spectrum& s, const Matrix& u0, const std::vector<double>& times) {
  require_times(times);
  if (u0.n() != s.n()) throw DimensionMismatch(s.n(), u0.n());
  const Matrix target = mean_part(u0);
  FlowTrajectory traj;
  traj.times = times;
  traj.states.resize(times.size());
  traj.diagnostics.resize(times.size());
  parallel_for(times.size(), [&](std::size_t k) {
    // The trace-free part is propagated on its own so that the distance to the
    // mean does not suffer cancellation once it falls below the rounding of u.
    const Matrix centred = heat_semigroup_apply(s, times[k], u0 - target);
    traj.states[k] = target + centred;
    traj.diagnostics[k] = flow_diagnostics(traj.states[k], target);
    traj.diagnostics[k].dist_to_mean = centred.norm();
  });
  return traj;
}

double laplacian_spectral_radius(const GeometryContext& ctx) {
  return hermitian_eigenvalues(assemble_superoperator(ctx).op).back();
}

FlowTrajectory heat_flow_rk4(const GeometryContext& ctx, const Matrix& u0, double step,
                             std::size_t steps, std::size_t record_stride) {
  require_same_dim(ctx.x(), u0);
  auto traj = integrate(u0, step, steps, record_stride,
                        [&](const Matrix& u, long) { return -laplacian_apply(ctx, u); });
  traj.stability_warning = step * laplacian_spectral_radius(ctx) > kRk4StabilityBound;
  return traj;
}

FlowTrajectory log_laplacian_flow(const GeometryContext& ctx, const Matrix& c0, double step,
                                  std::size_t steps, std::size_t record_stride) {
  require_same_dim(ctx.x(), c0);
  const auto ev0 = hermitian_eigenvalues(c0);
  if (!(ev0.front() > 0.0))
    throw NotPositive("log-Laplacian flow requires a positive definite start", ev0.front());

  auto traj = integrate(c0, step, steps, record_stride, [&](const Matrix& c, long k) {
    if (!c.is_finite()) throw IntegrationError("non-finite stage", k);
    const auto d = hermitian_eig(c.hermitian_part());
    if (!(d.eigenvalues.front() > 0.0))
      throw IntegrationError("loss of positive definiteness", k);
    return -laplacian_apply(ctx, matrix_function(d, ScalarFunction::log()));
  });
  // Linearized about c the right-hand side scales like Lap / c.
  traj.stability_warning =
      step * laplacian_spectral_radius(ctx) / ev0.front() > kRk4StabilityBound;
  return traj;
}

MonotonicityCheck entropy_monotonicity_check(const FlowTrajectory& traj) {
  std::vector<double> s(traj.states.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = von_neumann_entropy(traj.states[k]);
  return monotone(s);
}

MonotonicityCheck log_det_monotonicity_check(const FlowTrajectory& traj) {
  std::vector<double> v(traj.states.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto ev = hermitian_eigenvalues(traj.states[k]);
    if (!(ev.front() > 0.0)) throw NotPositive("log det of a state that is not positive definite", ev.front());
    double acc = 0.0;
    for (double l : ev) acc += std::log(l);
    v[k] = acc;
  }
  return monotone(v);
}

StabilityReport stability_experiment(const Spectrum& s, const Matrix& u0, const Matrix& v0,
                                     const std::vector<double>& times, std::size_t fannes_dim) {
  require_same_dim(u0, v0);
  if (u0.n() != s.n()) throw DimensionMismatch(s.n(), u0.n());
  require_times(times);
  require_positive_definite(u0, "stability experiment requires positive definite u0");
  require_positive_definite(v0, "stability experiment requires positive definite v0");

  const std::size_t n = s.n();
  StabilityReport report;
  report.fannes_dim = fannes_dim ? fannes_dim : n * n;
  report.lambda1 = lambda1(s);

  const cplx tu = u0.trace(), tv = v0.trace();
  report.trace_matched = std::abs(tu - tv) <= 1e-12 * std::max(1.0, std::abs(tu));

  const Matrix diff0 = u0 - v0;
  const double gap0 = eigenvalue_l1_gap(u0, v0);
  const bool unit_traces = std::abs(tu - 1.0) <= 1e-10 && std::abs(tv - 1.0) <= 1e-10;
  report.fannes_applicable = unit_traces && gap0 <= 1.0 / std::numbers::e;

  std::optional<double> bound, bound_n;
  if (gap0 <= 1.0) {
    bound = fannes_bound(gap0, report.fannes_dim);
    bound_n = fannes_bound(gap0, n);
  }

  // The difference evolves linearly, so it is propagated directly rather than
  // subtracting two evolved states.
  const Matrix diff0_mean = mean_part(diff0);
  const double hs0 = diff0.norm();
  const double hs0_centred = (diff0 - diff0_mean).norm();

  report.rows.resize(times.size());
  parallel_for(times.size(), [&](std::size_t k) {
    const double t = times[k];
    const Matrix u = heat_semigroup_apply(s, t, u0);
    const Matrix v = heat_semigroup_apply(s, t, v0);
    const Matrix d = heat_semigroup_apply(s, t, diff0);
    auto& row = report.rows[k];
    row.t = t;
    row.hs_distance = d.norm();
    double td = 0.0;
    for (double mu : hermitian_eigenvalues(d.hermitian_part())) td += std::abs(mu);
    row.trace_distance = td;
    row.eigenvalue_l1_gap = eigenvalue_l1_gap(u.hermitian_part(), v.hermitian_part());
    row.entropy_u = von_neumann_entropy(u.hermitian_part());
    row.entropy_v = von_neumann_entropy(v.hermitian_part());
    row.entropy_gap = std::abs(row.entropy_u - row.entropy_v);
    row.fannes_bound = bound;
    row.fannes_bound_dim_n = bound_n;
    row.contraction_envelope = hs0 * std::exp(-report.lambda1 * t);
  });

  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    const double decay = std::exp(-report.lambda1 * row.t);
    if (report.trace_matched) {
      if (row.hs_distance > hs0 * decay * (1.0 + 1e-8)) report.contraction_ok = false;
    } else {
      // Only the trace-free part of u - v decays.
      const Matrix d = heat_semigroup_apply(s, row.t, diff0) - diff0_mean;
      if (d.norm() > hs0_centred * decay * (1.0 + 1e-8)) report.contraction_ok = false;
    }
    if (k > 0 && row.trace_distance > report.rows[k - 1].trace_distance + 1e-9)
      report.trace_distance_monotone = false;
    if (report.fannes_applicable && row.entropy_gap > *row.fannes_bound + 1e-10)
      report.fannes_ok = false;
  }
  return report;
}

} // namespace mgeom
