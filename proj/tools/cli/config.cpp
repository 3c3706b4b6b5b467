#include "cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace spt::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& raw,
                    const std::string& where) {
  const char* begin = raw.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (raw.empty() || end != begin + raw.size() || !std::isfinite(v)) {
    throw ConfigError(where + ": malformed number for key '" + key + "': '" +
                      raw + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& raw,
              const std::string& where) {
  const char* begin = raw.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (raw.empty() || end != begin + raw.size() ||
      v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ConfigError(where + ": malformed integer for key '" + key + "': '" +
                      raw + "'");
  }
  return static_cast<int>(v);
}

struct ParseState {
  RunConfig cfg;
  bool chi_seen = false;
};

void apply(ParseState& st, const std::string& key, const std::string& value,
           const std::string& where) {
  RunConfig& cfg = st.cfg;
  if (key == "chi") {
    cfg.chi = parse_double(key, value, where);
    st.chi_seen = true;
  } else if (key == "m") {
    cfg.m = parse_double(key, value, where);
  } else if (key == "n_max") {
    cfg.n_max = parse_int(key, value, where);
  } else if (key == "terms") {
    cfg.terms = parse_int(key, value, where);
  } else if (key == "rel_tol") {
    cfg.rel_tol = parse_double(key, value, where);
  } else if (key == "abs_tol") {
    cfg.abs_tol = parse_double(key, value, where);
  } else if (key == "s_min") {
    cfg.s_min = parse_double(key, value, where);
  } else if (key == "s_max") {
    cfg.s_max = parse_double(key, value, where);
  } else if (key == "s_points") {
    cfg.s_points = parse_int(key, value, where);
  } else if (key == "h") {
    cfg.h = parse_double(key, value, where);
  } else if (key == "out_path") {
    if (value.empty()) {
      throw ConfigError(where + ": empty out_path");
    }
    cfg.out_path = value;
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

void apply_line(ParseState& st, const std::string& raw,
                const std::string& where) {
  const auto eq = raw.find('=');
  if (eq == std::string::npos) {
    throw ConfigError(where + ": expected 'key = value', got '" + trim(raw) +
                      "'");
  }
  const std::string key = trim(raw.substr(0, eq));
  const std::string value = trim(raw.substr(eq + 1));
  if (key.empty()) {
    throw ConfigError(where + ": missing key before '='");
  }
  apply(st, key, value, where);
}

void parse_file(ParseState& st, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    apply_line(st, line, path + ":" + std::to_string(line_no));
  }
}

void validate(const ParseState& st) {
  const RunConfig& cfg = st.cfg;
  if (!st.chi_seen) {
    throw ConfigError("missing required key 'chi'");
  }
  if (!(cfg.chi > 0.0)) {
    throw ConfigError("'chi' must be positive");
  }
  if (!(cfg.m > 0.0)) {
    throw ConfigError("'m' must be positive");
  }
  if (cfg.n_max < 0) {
    throw ConfigError("'n_max' must be >= 0");
  }
  if (cfg.terms < 1) {
    throw ConfigError("'terms' must be >= 1");
  }
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) {
    throw ConfigError("'rel_tol' and 'abs_tol' must be positive");
  }
  if (cfg.s_points && *cfg.s_points < 1) {
    throw ConfigError("'s_points' must be >= 1");
  }
  if (cfg.h && !(*cfg.h > 0.0)) {
    throw ConfigError("'h' must be positive");
  }
}

}  // namespace

Command parse_command_name(const std::string& name) {
  if (name == "rate") return Command::Rate;
  if (name == "efflag") return Command::Efflag;
  if (name == "kernel") return Command::Kernel;
  if (name == "wkb") return Command::Wkb;
  if (name == "trajectory") return Command::Trajectory;
  if (name == "spectrum") return Command::Spectrum;
  if (name == "propagator") return Command::Propagator;
  throw ConfigError("unknown command '" + name +
                    "' (expected rate, efflag, kernel, wkb, trajectory, "
                    "spectrum, or propagator)");
}

RunConfig parse_config(Command command,
                       const std::optional<std::string>& config_path,
                       const std::vector<std::string>& overrides,
                       const std::optional<std::string>& out_override) {
  ParseState st;
  st.cfg.command = command;
  if (config_path) {
    parse_file(st, *config_path);
  }
  for (const std::string& ov : overrides) {
    apply_line(st, ov, "--set " + ov);
  }
  if (out_override) {
    st.cfg.out_path = *out_override;
  }
  validate(st);
  return st.cfg;
}

}  // namespace spt::cli
