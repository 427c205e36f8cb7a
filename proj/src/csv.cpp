#include <optional>
#include <string>

#include "mgeom/flows.hpp"
#include "mgeom/matrix_io.hpp"

namespace mgeom {

namespace {
std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }
} // namespace

std::string trajectory_to_csv(const FlowTrajectory& traj) {
  std::string out = "t,trace_re,trace_im,min_eig,log_det,entropy,dist_to_mean\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const auto& d = traj.diagnostics[k];
    out += format_double(traj.times[k]) + "," + format_double(d.trace.real()) + "," +
           format_double(d.trace.imag()) + "," + cell(d.min_eigenvalue) + "," + cell(d.log_det) +
           "," + cell(d.entropy) + "," + format_double(d.dist_to_mean) + "\n";
  }
  return out;
}

std::string stability_to_csv(const StabilityReport& report) {
  std::string out = "t,hs_dist,trace_dist,eig_l1_gap,entropy_u,entropy_v,entropy_gap,fannes_bound,"
                    "contraction_envelope\n";
  for (const auto& r : report.rows) {
    out += format_double(r.t) + "," + format_double(r.hs_distance) + "," +
           format_double(r.trace_distance) + "," + format_double(r.eigenvalue_l1_gap) + "," +
           format_double(r.entropy_u) + "," + format_double(r.entropy_v) + "," +
           format_double(r.entropy_gap) + "," + cell(r.fannes_bound) + "," +
           format_double(r.contraction_envelope) + "\n";
  }
  return out;
}

} // namespace mgeom
