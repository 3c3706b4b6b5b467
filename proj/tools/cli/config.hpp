#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spt::cli {

enum class Command { Rate, Efflag, Kernel, Wkb, Trajectory, Spectrum,
                     Propagator };

// Anything wrong with the run description: unknown key, malformed number,
// missing requirement, unreadable file. Mapped to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fully resolved run description. Grid keys without a universal default
// stay unset here and are filled per command (see resolve_grid in
// commands.cpp); everything else carries the documented defaults.
struct RunConfig {
  Command command = Command::Rate;

  double chi = 0.0;  // required; validated > 0 by parse_config
  double m = 1.0;
  int n_max = 40;
  int terms = 5;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;

  std::optional<double> s_min;   // kernel: s grid; wkb: p0 grid;
  std::optional<double> s_max;   //   propagator: p^2 - m^2 grid;
  std::optional<int> s_points;   //   trajectory: s_max only
  std::optional<double> h;       // trajectory step; propagator i-eps

  std::string out_path = "-";
};

// "rate", "efflag", ... -> Command; throws ConfigError otherwise.
Command parse_command_name(const std::string& name);

// Layered config: file (optional), then --set overrides in order, then
// the --out shorthand. Validates keys, numbers, ranges; error messages
// carry the file line or the offending override.
RunConfig parse_config(Command command,
                       const std::optional<std::string>& config_path,
                       const std::vector<std::string>& overrides,
                       const std::optional<std::string>& out_override);

}  // namespace spt::cli
