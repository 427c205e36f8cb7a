#pragma once

#include <ostream>

#include "mgeom/cli/config.hpp"

namespace mgeom::cli {

// Exit codes: 0 success, 1 mathematical failure (falsified property, domain or
// solver error), 2 usage failure (bad config, unreadable files).
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

int cmd_props(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_poisson(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_heat(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_stability(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ricci(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: `<prog> <subcommand> --config <path> [--seed N] [--output DIR]`.
/// Errors are reported as one JSON object per line on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mgeom::cli
