// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mgeom/mgeom.hpp"
#include "oracle.hpp"

using namespace mgeom;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of a quantity against its limit.
struct Worst {
  double value = 0.0;
  void at_least(double v) { value = std::max(value, v); }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> uniform_times(double t_end, int points) {
  std::vector<double> t;
  for (int k = 0; k < points; ++k) t.push_back(t_end * k / (points - 1));
  return t;
}

Outcome oracle_equivalence() {
  Worst gap;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto ctx = make_context(n);
    const auto s = spectrum(ctx);
    const auto ref = oracle::eigenvalues(oracle::brute_force_superoperator(ctx));
    for (std::size_t j = 0; j < ref.size(); ++j) gap.at_least(std::abs(ref[j] - s.eigenvalues()[j]));
  }
  const auto s2 = spectrum(make_context(2));
  const std::vector<double> expected{0, 1, 1, 2};
  Worst n2;
  for (std::size_t j = 0; j < 4; ++j) n2.at_least(std::abs(s2.eigenvalues()[j] - expected[j]));
  return {gap.value <= 1e-10 && n2.value <= 1e-10,
          "max eigenvalue gap " + fmt("%.3g", gap.value) + ", n=2 deviation " + fmt("%.3g", n2.value)};
}

Outcome property_suite() {
  Worst worst;
  bool pass = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto report = check_properties(make_context(n), 1000 + n, 100);
    for (const auto& r : report.records) worst.at_least(r.worst_violation);
    pass = pass && report.all_pass();
  }
  auto rng = sample_engine(2024, 0);
  const Matrix x = random_hermitian(rng, 4);
  const auto degenerate = check_properties(make_context(4, CustomGenerators{x, x}), 7, 20);
  const bool control = !degenerate.at(kDerivationKernel).pass &&
                       !degenerate.at(kLaplacianKernel).pass;
  return {pass && control, "worst relative violation " + fmt("%.3g", worst.value) +
                               (control ? ", degenerate control fails as expected" : ", degenerate control did not fail")};
}

Outcome power_form() {
  Worst negative, scalar;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const double lmax = laplacian_spectral_radius(ctx);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_engine(3000 + n, i);
      // exp(h) with spectral radius log(1e3)/2 keeps the condition number <= 1e3
      const Matrix a = random_pd(rng, n, 1e-6, 0.5 * std::log(1e3));
      const auto ev = hermitian_eigenvalues(a);
      if (ev.back() / ev.front() > 1e3) return {false, "generated input exceeds condition 1e3"};
      const double c = 0.5 + 1.5 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Matrix scalar_a = Matrix::identity(n) * c;
      for (int m = 0; m <= 5; ++m) {
        const double scale = lmax * std::pow(ev.back(), m) * a.norm() * a.norm();
        negative.at_least(-dirichlet_power_form(ctx, a, m) / scale);
        const double scalar_scale = lmax * std::pow(c, m + 2) * static_cast<double>(n);
        scalar.at_least(std::abs(dirichlet_power_form(ctx, scalar_a, m)) / scalar_scale);
      }
    }
  }
  return {negative.value <= 1e-10 && scalar.value <= 1e-11,
          "worst relative negativity " + fmt("%.3g", negative.value) + ", worst scalar value " + fmt("%.3g", scalar.value)};
}

Outcome poisson_solver() {
  Worst residual, roundtrip;
  bool rejected = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const auto s = spectrum(ctx);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_engine(4000 + n, i);
      Matrix b = random_complex(rng, n);
      b -= mean_part(b);
      residual.at_least(solve_poisson(s, b).residual);
      const Matrix a = random_complex(rng, n);
      const Matrix back = solve_poisson(s, laplacian_apply(ctx, a)).solution;
      roundtrip.at_least((back - (a - mean_part(a))).norm());
    }
    try {
      (void)solve_poisson(s, Matrix::identity(n));
      rejected = false;
    } catch (const NotSolvable&) {
    }
  }
  return {residual.value <= 1e-9 && roundtrip.value <= 1e-9 && rejected,
          "worst residual " + fmt("%.3g", residual.value) + ", worst round trip " + fmt("%.3g", roundtrip.value) +
              (rejected ? ", b = I rejected" : ", b = I accepted")};
}

Outcome variational() {
  Worst shortfall, eigen_gap;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const auto s = spectrum(ctx);
    const double lam1 = lambda1(s);
    double min_q = 1e300;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = sample_engine(5000 + n, i);
      Matrix a = random_complex(rng, n);
      a -= mean_part(a);
      min_q = std::min(min_q, rayleigh_quotient(ctx, a));
    }
    shortfall.at_least(lam1 - min_q);
    eigen_gap.at_least(std::abs(rayleigh_quotient(ctx, s.eigenmatrix(lambda1_index(s))) - lam1));
  }
  return {shortfall.value <= 1e-9 && eigen_gap.value <= 1e-10,
          "max (lambda1 - min quotient) " + fmt("%.3g", shortfall.value) + ", eigenmatrix quotient gap " +
              fmt("%.3g", eigen_gap.value)};
}

Outcome heat_flow() {
  Worst trace, envelope, terminal;
  double min_eig = 1e300;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = spectrum(make_context(n));
    const double lam1 = lambda1(s);
    const auto times = uniform_times(30.0 / lam1, 31);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_engine(6000 + n, i);
      const Matrix u0 = random_pd(rng, n, 0.05, 1.5);
      const Matrix mean = mean_part(u0);
      const double d0 = (u0 - mean).norm();
      const auto traj = heat_flow_exact(s, u0, times);
      for (std::size_t k = 0; k < times.size(); ++k) {
        const auto& d = traj.diagnostics[k];
        trace.at_least(std::abs(d.trace - u0.trace()));
        min_eig = std::min(min_eig, d.min_eigenvalue.value_or(-1.0));
        envelope.at_least(d.dist_to_mean - d0 * std::exp(-lam1 * times[k]) * (1.0 + 1e-8));
      }
      terminal.at_least(traj.diagnostics.back().dist_to_mean);
    }
  }
  return {trace.value <= 1e-10 && min_eig > 0.0 && envelope.value <= 0.0 && terminal.value <= 1e-8,
          "trace drift " + fmt("%.3g", trace.value) + ", min eigenvalue " + fmt("%.3g", min_eig) +
              ", envelope excess " + fmt("%.3g", envelope.value) + ", terminal distance " + fmt("%.3g", terminal.value)};
}

Outcome rk4_order() {
  const auto ctx = make_context(4);
  const auto s = spectrum(ctx);
  const double lmax = laplacian_spectral_radius(ctx);
  const Matrix u0 = random_pd(std::uint64_t{7000}, 4, 0.05, 1.5);
  const double t_end = 1.0;
  const Matrix exact = heat_semigroup_apply(s, t_end, u0);
  // Base step h = 0.5 / lambda_max, rounded so that an integer number of steps reaches t_end.
  const auto base = static_cast<std::size_t>(std::ceil(t_end * lmax / 0.5));
  std::vector<double> errors;
  for (int k = 0; k < 3; ++k) {
    const std::size_t steps = base << k;
    const auto traj = heat_flow_rk4(ctx, u0, t_end / static_cast<double>(steps), steps, steps);
    errors.push_back((traj.states.back() - exact).norm());
  }
  const double r1 = errors[0] / errors[1], r2 = errors[1] / errors[2];
  const bool pass = r1 >= 12 && r1 <= 20 && r2 >= 12 && r2 <= 20;
  return {pass, "error ratios " + fmt("%.4g", r1) + ", " + fmt("%.4g", r2)};
}

Outcome entropy_monotonicity() {
  Worst entropy_drop, logdet_drop;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = spectrum(make_context(n));
    const auto times = uniform_times(10.0 / lambda1(s), 101);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_engine(8000 + n, i);
      const auto traj = heat_flow_exact(s, random_density(rng, n), times);
      entropy_drop.at_least(-entropy_monotonicity_check(traj).worst_increment);
      logdet_drop.at_least(-log_det_monotonicity_check(traj).worst_increment);
    }
  }
  return {entropy_drop.value <= 1e-9 && logdet_drop.value <= 1e-9,
          "worst entropy decrement " + fmt("%.3g", entropy_drop.value) + ", worst log det decrement " +
              fmt("%.3g", logdet_drop.value)};
}

Outcome contraction() {
  bool pass = true;
  int pairs = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = spectrum(make_context(n));
    const auto times = uniform_times(10.0 / lambda1(s), 41);
    for (std::uint64_t i = 0; i < 20; ++i) {
      auto rng = sample_engine(9000 + n, i);
      const Matrix u0 = random_density(rng, n);
      const Matrix v0 = random_density(rng, n);
      const auto rep = stability_experiment(s, u0, v0, times);
      pass = pass && rep.trace_matched && rep.contraction_ok && rep.trace_distance_monotone;
      ++pairs;
    }
  }
  return {pass, std::to_string(pairs) + " trace-matched pairs checked"};
}

Outcome fannes() {
  bool pass = true;
  int pairs = 0, applicable = 0;
  double worst_margin = -1e300;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 4;
    const auto s = spectrum(make_context(n));
    auto rng = sample_engine(10000, i);
    const Matrix u0 = random_density(rng, n);
    const Matrix w = random_density(rng, n);
    const Matrix v0 = u0 * 0.9 + w * 0.1;
    const auto rep = stability_experiment(s, u0, v0, uniform_times(10.0 / lambda1(s), 41));
    ++pairs;
    if (!rep.fannes_applicable) {
      pass = false;
      continue;
    }
    ++applicable;
    pass = pass && rep.fannes_ok;
    for (const auto& row : rep.rows) worst_margin = std::max(worst_margin, row.entropy_gap - *row.fannes_bound);
  }
  return {pass && applicable == pairs,
          std::to_string(applicable) + "/" + std::to_string(pairs) + " pairs in range, worst (gap - bound) " +
              fmt("%.3g", worst_margin)};
}

Outcome log_flow() {
  Worst trace, entropy_drop, terminal;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto ctx = make_context(n);
    const double lam1 = lambda1(spectrum(ctx));
    const double lmax = laplacian_spectral_radius(ctx);
    for (std::uint64_t i = 0; i < 20; ++i) {
      auto rng = sample_engine(11000 + n, i);
      Matrix c0 = random_pd(rng, n, 0.1, 1.0);
      c0 *= static_cast<double>(n) / c0.trace().real(); // mean eigenvalue 1
      const double lmin = hermitian_eigenvalues(c0).front();
      const double t_end = 30.0 / lam1;
      const auto steps = static_cast<std::size_t>(std::ceil(t_end * lmax / (0.5 * lmin)));
      const auto traj = log_laplacian_flow(ctx, c0, t_end / static_cast<double>(steps), steps, steps / 50);
      for (const auto& d : traj.diagnostics) trace.at_least(std::abs(d.trace - c0.trace()));
      entropy_drop.at_least(-entropy_monotonicity_check(traj).worst_increment);
      terminal.at_least(traj.diagnostics.back().dist_to_mean);
    }
  }
  return {trace.value <= 1e-10 && entropy_drop.value <= 1e-9 && terminal.value <= 1e-6,
          "trace drift " + fmt("%.3g", trace.value) + ", worst entropy decrement " + fmt("%.3g", entropy_drop.value) +
              ", terminal distance " + fmt("%.3g", terminal.value)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "mgeom_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::ofstream cfg(root / "config.json");
    cfg << R"({"n": 4, "seed": 42, "props": {"samples": 20}, "spectrum": {"dump_eigenmatrices": true},
               "flow": {"u0": {"random_pd": {"unit_trace": true}}, "t_max": 2, "dump_times": [1]},
               "stability": {"u0": {"random_pd": {"unit_trace": true}}, "v0": {"random_pd": {"unit_trace": true}}}})";
  }
  std::vector<std::string> outputs;
  for (const char* run : {"a", "b"}) {
    for (const char* sub : {"props", "spectrum", "heat", "stability", "ricci"}) {
      const std::string cmd = std::string("\"") + MGEOM_TOOL_PATH + "\" " + sub + " --config \"" +
                              (root / "config.json").string() + "\" --output \"" + (root / run).string() +
                              "\" > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, std::string("command failed: ") + sub};
    }
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    const fs::path other = root / "b" / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
      return {false, "output differs: " + entry.path().filename().string()};
    ++files;
  }
  fs::remove_all(root);
  return {files > 0, std::to_string(files) + " output files byte-identical across runs"};
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"derivation and Laplacian properties", property_suite},
      {"power-weighted Dirichlet form", power_form},
      {"Poisson solver", poisson_solver},
      {"lambda1 variational characterization", variational},
      {"heat flow convergence", heat_flow},
      {"RK4 fourth-order convergence", rk4_order},
      {"entropy and log det monotonicity", entropy_monotonicity},
      {"contraction of differences", contraction},
      {"Fannes entropy stability", fannes},
      {"log-Laplacian flow", log_flow},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-38s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
