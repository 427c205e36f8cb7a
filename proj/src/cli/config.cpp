#include "mgeom/cli/config.hpp"

#include <json.hpp>

#include "mgeom/errors.hpp"
#include "mgeom/matrix_io.hpp"
#include "mgeom/random.hpp"

namespace mgeom::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError("config: " + what); }

double get_positive(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(std::string(key) + " must be a number");
  const double v = j[key].get<double>();
  if (!(v > 0.0)) fail(std::string(key) + " must be > 0");
  return v;
}

std::size_t get_count(const json& j, const char* key, std::size_t fallback, std::size_t minimum) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer() || j[key].get<long long>() < static_cast<long long>(minimum))
    fail(std::string(key) + " must be an integer >= " + std::to_string(minimum));
  return j[key].get<std::size_t>();
}

std::vector<double> get_times(const json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) fail(std::string(key) + " must be an array of numbers");
  for (const auto& t : j[key]) {
    if (!t.is_number() || t.get<double>() < 0.0) fail(std::string(key) + " entries must be >= 0");
    out.push_back(t.get<double>());
  }
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k] < out[k - 1]) fail(std::string(key) + " must be ascending");
  return out;
}

Matrix load_sized(const fs::path& path, std::size_t n) {
  Matrix m = read_matrix(path);
  if (m.n() != n)
    fail(path.string() + " has dimension " + std::to_string(m.n()) + ", expected " + std::to_string(n));
  return m;
}

MatrixSource parse_source(const json& j, const fs::path& base, std::size_t n, const char* what) {
  if (j.is_string()) return load_sized(base / j.get<std::string>(), n);
  if (j.is_object() && j.contains("entries")) {
    Matrix m = matrix_from_json(j.dump());
    if (m.n() != n) fail(std::string(what) + " has the wrong dimension");
    return m;
  }
  if (j.is_object() && j.contains("random_pd")) {
    const auto& r = j["random_pd"];
    if (!r.is_object()) fail(std::string(what) + ".random_pd must be an object");
    RandomPdSource src;
    src.min_eig = get_positive(r, "min_eig", src.min_eig);
    src.scale = get_positive(r, "scale", src.scale);
    if (r.contains("unit_trace")) {
      if (!r["unit_trace"].is_boolean()) fail("unit_trace must be a boolean");
      src.unit_trace = r["unit_trace"].get<bool>();
    }
    return src;
  }
  fail(std::string(what) + " must be a file path, an inline matrix or {\"random_pd\": {...}}");
}

} // namespace

ExperimentConfig parse_config(std::string_view text, const fs::path& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");

  ExperimentConfig cfg;
  cfg.n = get_count(doc, "n", 0, 2);
  if (cfg.n == 0) fail("n is required");

  if (doc.contains("generators")) {
    const auto& g = doc["generators"];
    if (g.is_string()) {
      if (g.get<std::string>() != "clock_shift") fail("unknown generators " + g.get<std::string>());
    } else if (g.is_object() && g.contains("x") && g.contains("y")) {
      auto to_matrix = [&](const json& j, const char* name) {
        auto src = parse_source(j, base, cfg.n, name);
        if (!std::holds_alternative<Matrix>(src)) fail(std::string(name) + " must be a matrix");
        return std::get<Matrix>(src);
      };
      cfg.generators = CustomGenerators{to_matrix(g["x"], "generators.x"), to_matrix(g["y"], "generators.y")};
    } else {
      fail("generators must be \"clock_shift\" or {\"x\": ..., \"y\": ...}");
    }
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed must be a nonnegative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) fail("output_dir must be a string");
    cfg.output_dir = base / doc["output_dir"].get<std::string>();
  } else {
    cfg.output_dir = base;
  }

  if (doc.contains("props")) {
    const auto& p = doc["props"];
    cfg.props_samples = get_count(p, "samples", cfg.props_samples, 1);
    cfg.props_tolerance = get_positive(p, "tolerance", cfg.props_tolerance);
  }
  if (doc.contains("spectrum")) {
    const auto& s = doc["spectrum"];
    if (s.contains("dump_eigenmatrices")) {
      if (!s["dump_eigenmatrices"].is_boolean()) fail("dump_eigenmatrices must be a boolean");
      cfg.dump_eigenmatrices = s["dump_eigenmatrices"].get<bool>();
    }
  }
  if (doc.contains("poisson")) {
    const auto& p = doc["poisson"];
    if (!p.contains("b")) fail("poisson.b is required");
    cfg.poisson_b = parse_source(p["b"], base, cfg.n, "poisson.b");
  }
  if (doc.contains("flow")) {
    const auto& f = doc["flow"];
    if (f.contains("u0")) cfg.flow.u0 = parse_source(f["u0"], base, cfg.n, "flow.u0");
    cfg.flow.t_max = get_positive(f, "t_max", cfg.flow.t_max);
    if (f.contains("step")) cfg.flow.step = get_positive(f, "step", 1.0);
    cfg.flow.record_stride = get_count(f, "record_stride", cfg.flow.record_stride, 1);
    if (f.contains("method")) {
      if (!f["method"].is_string()) fail("flow.method must be a string");
      cfg.flow.method = f["method"].get<std::string>();
      if (cfg.flow.method != "exact" && cfg.flow.method != "rk4")
        fail("flow.method must be \"exact\" or \"rk4\"");
    }
    cfg.flow.dump_times = get_times(f, "dump_times");
  }
  if (doc.contains("stability")) {
    const auto& s = doc["stability"];
    if (s.contains("u0")) cfg.stability.u0 = parse_source(s["u0"], base, cfg.n, "stability.u0");
    if (s.contains("v0")) cfg.stability.v0 = parse_source(s["v0"], base, cfg.n, "stability.v0");
    cfg.stability.times = get_times(s, "times");
    cfg.stability.fannes_dim = get_count(s, "fannes_dim", 0, 0);
  }
  return cfg;
}

ExperimentConfig load_config(const fs::path& path) {
  const auto base = path.parent_path();
  return parse_config(read_file(path), base.empty() ? fs::path(".") : base);
}

Matrix resolve_matrix(const MatrixSource& source, std::size_t n, std::uint64_t seed,
                      std::uint64_t stream) {
  if (const auto* p = std::get_if<fs::path>(&source)) return load_sized(*p, n);
  if (const auto* m = std::get_if<Matrix>(&source)) return *m;
  const auto& r = std::get<RandomPdSource>(source);
  auto rng = sample_engine(seed, stream);
  Matrix u = random_pd(rng, n, r.min_eig, r.scale);
  if (r.unit_trace) u = u * (1.0 / u.trace().real());
  return u;
}

} // namespace mgeom::cli
