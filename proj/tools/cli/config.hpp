#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptsmc/errors.hpp"
#include "ptsmc/scenario.hpp"

namespace ptsmc::cli {

enum class ScenarioKind { SecondOrder, ThirdOrder, Attitude };

[[nodiscard]] std::string_view to_string(ScenarioKind kind) noexcept;
[[nodiscard]] std::optional<ScenarioKind> parse_kind(std::string_view name) noexcept;

/// Raised for malformed or invalid configuration. `line` is 0 when the error
/// is not tied to a line of a file; `key` is empty when no key is involved.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, int line, std::string key)
      : Error(what), line_(line), key_(std::move(key)) {}

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
  int line_;
  std::string key_;
};

/// Every numeric parameter of a scenario, keyed by the names used in config
/// files. Optional fields are derived when absent (see the resolved_* accessors).
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::SecondOrder;

  double t_f = 5.0;
  double eta = 3.0;
  double delta = 0.01;
  double K = 0.01;
  double K1 = 1.0;
  double phi = 0.0;
  double dt = 1e-4;
  std::optional<double> t_end;  ///< default t_f + 2
  int record_stride = 10;
  double dist_amp = 0.01;
  double dist_omega = 1.0;

  // Chain-of-integrators scenarios.
  std::vector<double> x0{5.0, 3.0};
  std::vector<double> a{1.0};

  // Attitude scenario.
  std::vector<double> J_diag{10.0, 12.0, 14.0};
  std::vector<double> q0;
  std::vector<double> w0{0.0, 0.0, 0.0};
  std::vector<double> L_diag{10.0, 10.0, 10.0};
  std::optional<double> obs_c;   ///< default dist_amp * |dist_omega|
  std::optional<double> obs_e0;  ///< default ||d_hat(0)||_inf + K
  bool renorm = true;

  [[nodiscard]] int order() const noexcept;
  [[nodiscard]] double resolved_t_end() const noexcept;
  [[nodiscard]] double resolved_obs_c() const noexcept;
  [[nodiscard]] double resolved_obs_e0() const noexcept;

  /// Defaults for a scenario kind (the published experiment parameters).
  static ScenarioConfig defaults(ScenarioKind kind);
};

struct Preset {
  std::string name;
  std::string description;
  ScenarioConfig config;
};

[[nodiscard]] const std::vector<Preset>& presets();

/// Resolves a scenario kind name or a preset name to its base configuration.
[[nodiscard]] std::optional<ScenarioConfig> base_config(std::string_view name);

/// Applies one `key = value` assignment. Throws ConfigError naming the key.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                   int line = 0);

/// Parses the line-oriented `key = value` format (`#` starts a comment) on
/// top of `base`, then validates. Unknown keys and keys that do not apply to
/// the scenario are errors.
[[nodiscard]] ScenarioConfig parse_config(std::istream& in, ScenarioConfig base);

/// Reads `path` and parses it on top of the defaults for `kind`.
[[nodiscard]] ScenarioConfig load_config(const std::string& path, ScenarioKind kind);
[[nodiscard]] ScenarioConfig load_config(const std::string& path, ScenarioConfig base);

/// Re-checks every module precondition; throws ConfigError with the key name.
void validate(const ScenarioConfig& cfg);

/// Writes the resolved configuration in the same `key = value` format, each
/// line prefixed with `prefix`.
void write_config(std::ostream& out, const ScenarioConfig& cfg, std::string_view prefix = "");

/// Keys a sweep may vary.
[[nodiscard]] bool is_numeric_key(std::string_view key) noexcept;

/// Parses a comma-separated list of numbers for a sweep. Blank text gives an
/// empty list; malformed entries throw ConfigError.
[[nodiscard]] std::vector<double> parse_value_list(std::string_view text);

/// Full-precision (17 significant digit) decimal rendering.
[[nodiscard]] std::string format_double(double v);

// Builders for the core scenario types. The config must be valid.
[[nodiscard]] ScalarScenario make_scalar_scenario(const ScenarioConfig& cfg);
[[nodiscard]] AttitudeScenario make_attitude_scenario(const ScenarioConfig& cfg);

}  // namespace ptsmc::cli
