#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/runner.hpp"

namespace {

using namespace ptsmc::cli;

ScenarioConfig resolve(const std::string& scenario, const std::string& config_path) {
  auto base = base_config(scenario);
  if (!base) {
    throw ConfigError("unknown scenario or preset '" + scenario + "' (see `ptsmc presets`)", 0,
                      "scenario");
  }
  if (config_path.empty()) {
    validate(*base);
    return *base;
  }
  return load_config(config_path, *base);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prescribed-time sliding-mode control simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string config_path;
  std::string out_dir;

  auto* run_cmd = app.add_subcommand("run", "Run one scenario and write trajectory.csv / summary.txt");
  run_cmd->add_option("--scenario", scenario, "second_order | third_order | attitude | preset")
      ->required();
  run_cmd->add_option("--config", config_path, "key = value overrides")->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_dir, "output directory")->required();

  std::string key;
  std::string values_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario once per parameter value");
  sweep_cmd->add_option("--scenario", scenario, "second_order | third_order | attitude | preset")
      ->required();
  sweep_cmd->add_option("--config", config_path, "key = value overrides")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--key", key, "numeric configuration key to vary")->required();
  sweep_cmd->add_option("--values", values_text, "comma-separated values")->required();
  sweep_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* presets_cmd = app.add_subcommand("presets", "List the built-in experiment presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitRuntimeError;
  }

  if (presets_cmd->parsed()) {
    for (const auto& p : presets()) {
      std::cout << p.name << "\t" << to_string(p.config.scenario) << "\t" << p.description << '\n';
    }
    return kExitOk;
  }

  ScenarioConfig cfg;
  try {
    cfg = resolve(scenario, config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }

  if (run_cmd->parsed()) {
    return run(cfg, out_dir, std::cerr);
  }
  std::vector<double> values;
  try {
    values = parse_value_list(values_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return sweep(cfg, key, values, out_dir, std::cerr);
}
