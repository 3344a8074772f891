#pragma once

#include <iosfwd>

#include "suned/config.hpp"
#include "suned/selftest.hpp"

namespace suned::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

/// Runs every theorem check on every draw, writes report.json / table.csv /
/// manifest.json, and returns kExitPass iff all checks passed. Config and
/// solver errors propagate as ConfigError / SolverError for the CLI to map.
int run_verify(const ExperimentConfig& cfg, std::ostream& log);

/// Same pipeline without verdict gating: dumps the per-diagram energy table.
int run_spectrum(const ExperimentConfig& cfg, std::ostream& log);

/// Small-instance invariant suite plus a manifest; returns kExitPass iff clean.
int run_selftest(const SelftestOptions& opts, const OutputOptions& outputs,
                 std::ostream& log);

}  // namespace suned::cli
