#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace mgeom {

/// Runs body(i) for i in [0, count), split across OpenMP threads when
/// available. Iterations must be independent. An exception thrown by any
/// iteration is rethrown after the loop; the lowest failing index wins, so the
/// reported error does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace mgeom
