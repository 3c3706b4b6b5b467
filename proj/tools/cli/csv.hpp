#pragma once

#include <string>

#include "cli/commands.hpp"

namespace spt::cli {

// Scientific notation, 17 significant digits, exponent stripped of '+'
// and leading zeros: 1 -> "1.0000000000000000e0", 0.5 ->
// "5.0000000000000000e-1". Round-trips any finite double bit-exactly.
std::string format_value(double v);

// Header line, one line per row, trailing newline, no locale dependence.
std::string render_csv(const OutputTable& table);

// Writes render_csv output to out_path; "-" means standard output.
// Throws ConfigError when the path cannot be written.
void emit_csv(const OutputTable& table, const std::string& out_path);

}  // namespace spt::cli
