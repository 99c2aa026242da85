#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "ptsmc/scenario.hpp"

namespace ptsmc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntimeError = 1,
  kExitInvariantFailure = 2,
};

/// Figures of merit reported in summary.txt and sweep.csv.
struct RunSummary {
  double error_at_switch = 0.0;  ///< ||x||_inf (scalar) or ||eps1||_inf (attitude) at t_f - delta
  double error_at_tf = 0.0;      ///< same at t_f
  double final_error = 0.0;      ///< same at t_end
  double initial_abs_u = 0.0;
  double max_abs_u = 0.0;
  double max_abs_u_prescribed = 0.0;
  double envelope_max_violation = 0.0;
  double envelope_tolerance = 0.0;
  bool envelope_pass = true;
  bool has_observer = false;
  double observer_max_violation = 0.0;
  double observer_max_ratio = 0.0;
  bool observer_pass = true;
  double max_norm_drift = 0.0;

  [[nodiscard]] bool invariants_hold() const noexcept { return envelope_pass && observer_pass; }
};

/// Runs the configured scenario in-process.
[[nodiscard]] Trajectory simulate(const ScenarioConfig& cfg);

[[nodiscard]] RunSummary summarize(const ScenarioConfig& cfg, const Trajectory& traj);

/// CSV column names; depend only on the scenario kind.
[[nodiscard]] std::vector<std::string> csv_columns(ScenarioKind kind);

void write_trajectory_csv(std::ostream& out, ScenarioKind kind, const Trajectory& traj);
void write_summary(std::ostream& out, const ScenarioConfig& cfg, const RunSummary& summary);

/// Executes a scenario and writes trajectory.csv and summary.txt into out_dir.
/// Returns kExitOk, kExitInvariantFailure or kExitRuntimeError; diagnostics go to `err`.
int run(const ScenarioConfig& cfg, const std::filesystem::path& out_dir, std::ostream& err);

/// One run per value in its own sub-directory, plus sweep.csv in out_dir.
/// A failed run is recorded and the sweep continues.
int sweep(const ScenarioConfig& base, const std::string& key, const std::vector<double>& values,
          const std::filesystem::path& out_dir, std::ostream& err);

}  // namespace ptsmc::cli
