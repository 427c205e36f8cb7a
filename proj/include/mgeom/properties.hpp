#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgeom/geometry.hpp"

namespace mgeom {

/// Outcome of one executable property over a batch of seeded samples.
/// Violations are relative to the natural scale of the quantity (operator norm
/// of the Laplacian times the relevant input norms).
struct PropertyRecord {
  std::string property;
  std::size_t samples = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct PropertyReport {
  std::vector<PropertyRecord> records;
  std::size_t kernel_dimension = 0;
  double lambda1 = 0.0;     // sharp lower norm-equivalence constant
  double lambda_max = 0.0;  // sharp upper constant

  bool all_pass() const;
  std::vector<std::string> failing() const;
  const PropertyRecord& at(const std::string& property) const;
};

// Property ids, in report order.
inline constexpr const char* kDerivationKernel = "derivations_vanish_only_on_scalars";
inline constexpr const char* kDerivationAntisymmetry = "derivation_antisymmetry";
inline constexpr const char* kNormEquivalence = "norm_equivalence";
inline constexpr const char* kDirichletPositivity = "dirichlet_positivity";
inline constexpr const char* kDirichletIdentity = "dirichlet_zero_implies_constant";
inline constexpr const char* kLaplacianKernel = "laplacian_kernel_is_scalars";
inline constexpr const char* kLaplacianTraceFree = "laplacian_trace_free";
inline constexpr const char* kPowerForm = "power_form_nonnegative";

inline constexpr double kPropertyTol = 1e-9;

/// Evaluates every property on `samples` seeded random inputs. Failures are data,
/// not exceptions. Throws DomainError only for samples == 0.
PropertyReport check_properties(const GeometryContext& ctx, std::uint64_t seed,
                                std::size_t samples, double tolerance = kPropertyTol);

/// {"kernel_dimension", "lambda1", "lambda_max", "properties": [{property, samples,
/// worst_violation, tolerance, pass}, ...]}
std::string report_to_json(const PropertyReport& report);

} // namespace mgeom
