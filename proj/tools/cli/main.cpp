#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/csv.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Proper-time treatment of charged scalar pair creation in a constant "
      "electric field"};
  app.name("schwingerpt");

  std::string command;
  std::optional<std::string> config_path;
  std::optional<std::string> out_override;
  std::vector<std::string> overrides;
  app.add_option("command", command,
                 "rate | efflag | kernel | wkb | trajectory | spectrum | "
                 "propagator")
      ->required();
  app.add_option("--config", config_path, "config file, one key = value per line");
  app.add_option("--set", overrides, "inline key=value override (repeatable)");
  app.add_option("--out", out_override, "output CSV path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const spt::cli::Command cmd = spt::cli::parse_command_name(command);
    const spt::cli::RunConfig cfg =
        spt::cli::parse_config(cmd, config_path, overrides, out_override);
    const spt::cli::OutputTable table = spt::cli::run_command(cfg);
    spt::cli::emit_csv(table, cfg.out_path);
    return 0;
  } catch (const spt::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    // NonConvergence, state blowup, overflow, pole hits: numerics, not config.
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  }
}
