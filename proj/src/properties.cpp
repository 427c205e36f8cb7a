#include "mgeom/properties.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <json.hpp>

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/linalg.hpp"
#include "mgeom/matrix_io.hpp"
#include "mgeom/parallel.hpp"
#include "mgeom/random.hpp"
#include "mgeom/spectral.hpp"

namespace mgeom {

namespace {

enum Slot {
  kA, kB, kC, kD, kE, kF, kG, kPower, kSlots
};

using Violations = std::array<double, kSlots>;

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

Violations sample_violations(const GeometryContext& ctx, double lam1, double lam_max,
                             std::uint64_t seed, std::size_t index) {
  auto rng = sample_engine(seed, index);
  const std::size_t n = ctx.n();
  const Matrix a = random_complex(rng, n);
  const Matrix b = random_complex(rng, n);
  const Matrix h = random_hermitian(rng, n);
  const Matrix p = random_pd(rng, n, 0.05, 2.0);
  std::uniform_real_distribution<double> unit(0.5, 2.0);
  const double c = unit(rng);
  const Matrix scalar = Matrix::identity(n) * c;

  const double L = lam_max;
  const double rootL = std::sqrt(L);
  Violations v{};

  // derivations kill scalars
  v[kA] = ratio(delta1(ctx, scalar).norm() + delta2(ctx, scalar).norm(), c * rootL);

  // tr(a d b) = -tr(b d a); d maps Hermitian to anti-Hermitian
  for (auto delta : {&delta1, &delta2}) {
    const cplx lhs = (a * (*delta)(ctx, b)).trace();
    const cplx rhs = (b * (*delta)(ctx, a)).trace();
    v[kB] = std::max(v[kB], ratio(std::abs(lhs + rhs), a.norm() * b.norm() * rootL));
    const Matrix dh = (*delta)(ctx, h);
    v[kB] = std::max(v[kB], ratio((dh.adjoint() + dh).norm(), h.norm() * rootL));
  }

  // lambda1 |a - abar|^2 <= <a - abar, Lap(a - abar)> <= lambda_max |a - abar|^2
  const Matrix centred = a - mean_part(a);
  const double r = hs_inner(centred, centred).real();
  const cplx form = hs_inner(centred, laplacian_apply(ctx, centred));
  v[kC] = ratio(std::max({0.0, lam1 * r - form.real(), form.real() - L * r}), L * r);

  // Dirichlet form of each derivation is nonnegative, and so is the full form
  v[kD] = ratio(std::max(0.0, -form.real()) + std::abs(form.imag()), L * r);
  for (const Matrix* w : {&ctx.x(), &ctx.y()}) {
    const cplx part = hs_inner(a, commutator(*w, commutator(*w, a)));
    v[kD] = std::max(v[kD], ratio(std::max(0.0, -part.real()) + std::abs(part.imag()),
                                  L * a.norm() * a.norm()));
  }

  // <a, ad_w^2 a> = ||ad_w a||^2, so a vanishing form forces ad_w a = 0
  {
    const double e1 = delta1(ctx, a).norm(), e2 = delta2(ctx, a).norm();
    const cplx f1 = hs_inner(a, commutator(ctx.y(), commutator(ctx.y(), a)));
    const cplx f2 = hs_inner(a, commutator(ctx.x(), commutator(ctx.x(), a)));
    const double scale = L * a.norm() * a.norm();
    v[kE] = std::max(ratio(std::abs(f1 - e1 * e1), scale), ratio(std::abs(f2 - e2 * e2), scale));
    const cplx full = hs_inner(a, laplacian_apply(ctx, a));
    v[kE] = std::max(v[kE], ratio(std::abs(full - (e1 * e1 + e2 * e2)), scale));
  }

  // scalars are in the kernel
  v[kF] = ratio(laplacian_apply(ctx, scalar).norm(), c * L * std::sqrt(static_cast<double>(n)));

  v[kG] = ratio(std::abs(laplacian_apply(ctx, a).trace()), L * a.norm());

  // tr(p^m Lap p) >= 0 for PD p, and = 0 for scalar p
  const double pnorm = p.norm();
  for (int m = 0; m <= 5; ++m) {
    const double val = dirichlet_power_form(ctx, p, m);
    const double scale = L * std::pow(pnorm, m + 1);
    v[kPower] = std::max(v[kPower], ratio(std::max(0.0, -val), scale));
    const double sval = dirichlet_power_form(ctx, scalar, m);
    v[kPower] = std::max(v[kPower], ratio(std::abs(sval), L * std::pow(c, m + 1)));
  }
  return v;
}

} // namespace

bool PropertyReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

std::vector<std::string> PropertyReport::failing() const {
  std::vector<std::string> out;
  for (const auto& r : records)
    if (!r.pass) out.push_back(r.property);
  return out;
}

const PropertyRecord& PropertyReport::at(const std::string& property) const {
  for (const auto& r : records)
    if (r.property == property) return r;
  throw DomainError("unknown property " + property);
}

PropertyReport check_properties(const GeometryContext& ctx, std::uint64_t seed,
                                std::size_t samples, double tolerance) {
  if (samples < 1) throw DomainError("check_properties requires samples >= 1");

  const Spectrum spec = spectrum(ctx);
  PropertyReport report;
  report.kernel_dimension = spec.kernel_dimension();
  report.lambda_max = spec.lambda_max();
  try {
    report.lambda1 = lambda1(spec);
  } catch (const DomainError&) {
    report.lambda1 = 0.0;
  }
  const double L = report.lambda_max > 0.0 ? report.lambda_max : 1.0;

  std::vector<Violations> per_sample(samples);
  parallel_for(samples, [&](std::size_t i) {
    per_sample[i] = sample_violations(ctx, report.lambda1, L, seed, i);
  });

  Violations worst{};
  for (const auto& v : per_sample)
    for (std::size_t k = 0; k < kSlots; ++k) worst[k] = std::max(worst[k], v[k]);

  // kernel of the assembled operator must be exactly the scalars
  const double kernel_excess =
      std::abs(static_cast<double>(report.kernel_dimension) - 1.0);
  worst[kA] = std::max(worst[kA], kernel_excess);
  worst[kF] = std::max(worst[kF], kernel_excess);
  {
    const auto sup = assemble_superoperator(ctx);
    const double n = static_cast<double>(ctx.n());
    worst[kF] = std::max(worst[kF], sup.apply(Matrix::identity(ctx.n())).norm() / (L * std::sqrt(n)));
  }

  const std::array<const char*, kSlots> names{
      kDerivationKernel, kDerivationAntisymmetry, kNormEquivalence, kDirichletPositivity,
      kDirichletIdentity, kLaplacianKernel, kLaplacianTraceFree, kPowerForm};
  for (std::size_t k = 0; k < kSlots; ++k) {
    const double w = worst[k];
    report.records.push_back({names[k], samples, w, tolerance, std::isfinite(w) && w <= tolerance});
  }
  return report;
}

std::string report_to_json(const PropertyReport& report) {
  // Hand-formatted so numbers carry 17 significant digits like every other writer.
  std::string out = "{\n  \"kernel_dimension\": " + std::to_string(report.kernel_dimension) +
                    ",\n  \"lambda1\": " + format_double(report.lambda1) +
                    ",\n  \"lambda_max\": " + format_double(report.lambda_max) +
                    ",\n  \"all_pass\": " + (report.all_pass() ? "true" : "false") +
                    ",\n  \"properties\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"property\": " + nlohmann::json(r.property).dump() +
           ", \"samples\": " + std::to_string(r.samples) +
           ", \"worst_violation\": " + format_double(r.worst_violation) +
           ", \"tolerance\": " + format_double(r.tolerance) +
           ", \"pass\": " + (r.pass ? "true" : "false") + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

} // namespace mgeom
