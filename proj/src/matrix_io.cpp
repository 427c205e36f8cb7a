#include "mgeom/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mgeom/errors.hpp"

namespace mgeom {

std::string format_double(double v) {
  if (v == 0.0) return "0"; // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_json(const Matrix& a) {
  std::string out = "{\"n\": " + std::to_string(a.n()) + ", \"entries\": [";
  for (std::size_t i = 0; i < a.n(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j) out += ", ";
      out += "[" + format_double(a(i, j).real()) + ", " + format_double(a(i, j).imag()) + "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

Matrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw ConfigError("matrix JSON must be an object with \"n\" and \"entries\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
    throw ConfigError("matrix JSON: \"n\" must be a positive integer");
  const auto n = doc["n"].get<std::size_t>();
  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n)
    throw ConfigError("matrix JSON: \"entries\" must hold n rows");
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw ConfigError("matrix JSON: row " + std::to_string(i) + " must hold n entries");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& z = row[j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ConfigError("matrix JSON: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") must be [re, im]");
      a(i, j) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  if (!a.is_finite()) throw ConfigError("matrix JSON: entries must be finite");
  return a;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix read_matrix(const std::filesystem::path& path) {
  try {
    return matrix_from_json(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& a) {
  write_file_atomic(path, matrix_to_json(a) + "\n");
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ConfigError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot rename " + tmp.string() + " to " + path.string());
}

} // namespace mgeom
