#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mgeom/matrix.hpp"

namespace mgeom {

// Matrix JSON: {"n": n, "entries": [[[re, im], ...], ...]}, row-major, numbers
// written with 17 significant digits.

std::string matrix_to_json(const Matrix& a);
/// Throws ConfigError on malformed input, wrong shape or non-finite entries.
Matrix matrix_from_json(std::string_view text);

Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& a);

/// "%.17g"; the representation used by every writer in the project.
std::string format_double(double v);

/// Write through a temporary sibling file and rename it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

} // namespace mgeom
