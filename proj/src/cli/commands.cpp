#include "mgeom/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgeom/mgeom.hpp"

namespace mgeom::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                json extra = json::object()) {
  json j = {{"error", kind}, {"message", message}};
  j.update(extra);
  err << j.dump() << "\n";
}

// Maps exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const NotSolvable& e) {
    emit_error(err, "not_solvable", e.what(), {{"trace", e.trace_abs()}});
  } catch (const NotPositive& e) {
    emit_error(err, "not_positive", e.what(), {{"eigenvalue", e.eigenvalue()}});
  } catch (const NotHermitian& e) {
    emit_error(err, "not_hermitian", e.what(), {{"violation", e.violation()}});
  } catch (const DegenerateGeometry& e) {
    emit_error(err, "degenerate_geometry", e.what(), {{"kernel_dimension", e.kernel_dim()}});
  } catch (const IntegrationError& e) {
    emit_error(err, "integration", e.what(), {{"step", e.step()}});
  } catch (const Error& e) {
    emit_error(err, "math", e.what());
  } catch (const ConfigError& e) {
    emit_error(err, "config", e.what());
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    emit_error(err, "io", e.what());
    return kExitUsage;
  }
  return kExitMath;
}

fs::path prepare_output(const ExperimentConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + cfg.output_dir.string());
  return cfg.output_dir;
}

const MatrixSource& required(const std::optional<MatrixSource>& src, const char* name) {
  if (!src) throw ConfigError(std::string("config: ") + name + " is required for this command");
  return *src;
}

std::size_t step_count(double t_max, double step) {
  const double k = std::round(t_max / step);
  return k < 1.0 ? 1 : static_cast<std::size_t>(k);
}

// Dump times of integrated flows snap to the nearest step count.
std::size_t steps_to(double t, double step) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("config: dump times must be finite and nonnegative");
  return static_cast<std::size_t>(std::llround(t / step));
}

void dump_states(const fs::path& dir, const std::string& prefix, const std::vector<double>& times,
                 const std::function<Matrix(double)>& state_at) {
  for (std::size_t i = 0; i < times.size(); ++i)
    write_matrix(dir / (prefix + "_state_" + std::to_string(i) + ".json"), state_at(times[i]));
}

} // namespace

int cmd_props(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ctx = make_context(cfg.n, cfg.generators);
    const auto report = check_properties(ctx, cfg.seed, cfg.props_samples, cfg.props_tolerance);
    const auto path = prepare_output(cfg) / "props.json";
    write_file_atomic(path, report_to_json(report));
    out << "props: " << path.string() << "\n";
    if (report.all_pass()) return kExitOk;
    emit_error(err, "property_failure", "properties failed", {{"failing", report.failing()}});
    return kExitMath;
  });
}

int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ctx = make_context(cfg.n, cfg.generators);
    const auto s = spectrum(ctx);
    std::string lam1 = "";
    try {
      lam1 = format_double(lambda1(s));
    } catch (const DomainError&) {
    }
    if (s.kernel_dimension() > 1)
      err << json{{"warning", "degenerate_kernel"},
                  {"message", "Laplacian kernel is larger than the scalars"},
                  {"kernel_dimension", s.kernel_dimension()}}
                 .dump()
          << "\n";

    std::string csv = "# n=" + std::to_string(cfg.n) + " generators=" + ctx.generator_name() +
                      " lambda1=" + lam1 + " kernel_dimension=" +
                      std::to_string(s.kernel_dimension()) + "\nindex,eigenvalue\n";
    for (std::size_t j = 0; j < s.size(); ++j)
      csv += std::to_string(j) + "," + format_double(s.eigenvalues()[j]) + "\n";
    const auto dir = prepare_output(cfg);
    write_file_atomic(dir / "spectrum.csv", csv);
    if (cfg.dump_eigenmatrices)
      for (std::size_t j = 0; j < s.size(); ++j)
        write_matrix(dir / ("eigenmatrix_" + std::to_string(j) + ".json"), s.eigenmatrix(j));
    out << "spectrum: " << (dir / "spectrum.csv").string() << "\n";
    return kExitOk;
  });
}

int cmd_poisson(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Matrix b = resolve_matrix(required(cfg.poisson_b, "poisson.b"), cfg.n, cfg.seed, 3);
    const auto ctx = make_context(cfg.n, cfg.generators);
    const auto sol = solve_poisson(spectrum(ctx), b);
    const std::string doc = "{\"solution\": " + matrix_to_json(sol.solution) +
                            ", \"residual\": " + format_double(sol.residual) +
                            ", \"projected_source_norm\": " +
                            format_double(sol.projected_source_norm) + "}\n";
    const auto path = prepare_output(cfg) / "poisson.json";
    write_file_atomic(path, doc);
    out << "poisson: " << path.string() << "\n";
    return kExitOk;
  });
}

int cmd_heat(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Matrix u0 = resolve_matrix(required(cfg.flow.u0, "flow.u0"), cfg.n, cfg.seed, 1);
    const auto ctx = make_context(cfg.n, cfg.generators);
    const auto s = spectrum(ctx);
    const double step = cfg.flow.step.value_or(0.1 / s.lambda_max());
    const std::size_t steps = step_count(cfg.flow.t_max, step);
    const std::size_t stride = cfg.flow.record_stride;

    FlowTrajectory traj;
    if (cfg.flow.method == "rk4") {
      traj = heat_flow_rk4(ctx, u0, step, steps, stride);
      if (traj.stability_warning)
        err << json{{"warning", "rk4_stability"},
                    {"message", "step exceeds the RK4 stability bound"}}.dump() << "\n";
    } else {
      std::vector<double> times;
      for (std::size_t k = 0; k <= steps; k += stride) times.push_back(static_cast<double>(k) * step);
      if (steps % stride != 0) times.push_back(static_cast<double>(steps) * step);
      traj = heat_flow_exact(s, u0, times);
    }
    const auto dir = prepare_output(cfg);
    write_file_atomic(dir / "heat.csv", trajectory_to_csv(traj));
    dump_states(dir, "heat", cfg.flow.dump_times, [&](double t) {
      if (cfg.flow.method != "rk4") return heat_semigroup_apply(s, t, u0);
      const std::size_t k = steps_to(t, step);
      return heat_flow_rk4(ctx, u0, step, k, std::max<std::size_t>(k, 1)).states.back();
    });
    out << "heat: " << (dir / "heat.csv").string() << "\n";
    return kExitOk;
  });
}

int cmd_stability(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Matrix u0 = resolve_matrix(required(cfg.stability.u0, "stability.u0"), cfg.n, cfg.seed, 1);
    const Matrix v0 = resolve_matrix(required(cfg.stability.v0, "stability.v0"), cfg.n, cfg.seed, 2);
    const auto ctx = make_context(cfg.n, cfg.generators);
    const auto s = spectrum(ctx);
    auto times = cfg.stability.times;
    if (times.empty()) {
      const double horizon = 10.0 / lambda1(s);
      for (int k = 0; k <= 20; ++k) times.push_back(horizon * k / 20.0);
    }
    const auto report = stability_experiment(s, u0, v0, times, cfg.stability.fannes_dim);
    const auto dir = prepare_output(cfg);
    write_file_atomic(dir / "stability.csv", stability_to_csv(report));
    const json summary = {{"trace_matched", report.trace_matched},
                          {"fannes_applicable", report.fannes_applicable},
                          {"fannes_dim", report.fannes_dim},
                          {"contraction_ok", report.contraction_ok},
                          {"trace_distance_monotone", report.trace_distance_monotone},
                          {"fannes_ok", report.fannes_ok}};
    write_file_atomic(dir / "stability_summary.json", summary.dump(2) + "\n");
    out << "stability: " << (dir / "stability.csv").string() << "\n";
    if (report.all_pass()) return kExitOk;
    emit_error(err, "stability_failure", "a stability assertion failed", summary);
    return kExitMath;
  });
}

int cmd_ricci(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Matrix c0 = resolve_matrix(required(cfg.flow.u0, "flow.u0"), cfg.n, cfg.seed, 1);
    const auto ctx = make_context(cfg.n, cfg.generators);
    const double lam_max = laplacian_spectral_radius(ctx);
    const double min_eig = hermitian_eigenvalues(c0).front();
    const double step = cfg.flow.step.value_or(0.1 * std::min(1.0, min_eig) / lam_max);
    const std::size_t steps = step_count(cfg.flow.t_max, step);
    const auto traj = log_laplacian_flow(ctx, c0, step, steps, cfg.flow.record_stride);
    if (traj.stability_warning)
      err << json{{"warning", "rk4_stability"},
                  {"message", "step exceeds the RK4 stability bound"}}.dump() << "\n";
    const auto dir = prepare_output(cfg);
    write_file_atomic(dir / "ricci.csv", trajectory_to_csv(traj));
    dump_states(dir, "ricci", cfg.flow.dump_times,
                [&](double t) {
                  const std::size_t k = steps_to(t, step);
                  return log_laplacian_flow(ctx, c0, step, k, std::max<std::size_t>(k, 1)).states.back();
                });
    out << "ricci: " << (dir / "ricci.csv").string() << "\n";
    const auto mono = entropy_monotonicity_check(traj);
    if (mono.pass) return kExitOk;
    emit_error(err, "entropy_decrease", "entropy decreased along the flow",
               {{"worst_increment", mono.worst_increment}});
    return kExitMath;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix geometry toolkit: Laplacian spectra, Poisson solver, heat and entropy flows"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string output;

  using Command = int (*)(const ExperimentConfig&, std::ostream&, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Command>> commands = {
      {"props", "check the derivation and Laplacian properties on random inputs", cmd_props},
      {"spectrum", "eigenvalues of the Laplacian", cmd_spectrum},
      {"poisson", "solve Lap a = b on trace-free matrices", cmd_poisson},
      {"heat", "heat flow u' = -Lap u", cmd_heat},
      {"stability", "contraction and entropy stability of two heat flows", cmd_stability},
      {"ricci", "log-Laplacian flow c' = -Lap log c", cmd_ricci},
  };
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--output", output, "override the output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kExitUsage;
  }

  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    emit_error(err, "config", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    // e.g. non-Hermitian custom generators are caught later; matrix shape errors land here
    emit_error(err, "config", e.what());
    return kExitUsage;
  }
  if (seed) cfg.seed = *seed;
  if (!output.empty()) cfg.output_dir = output;

  for (const auto& [name, help, fn] : commands)
    if (app.got_subcommand(name)) return fn(cfg, out, err);
  return kExitUsage;
}

} // namespace mgeom::cli
