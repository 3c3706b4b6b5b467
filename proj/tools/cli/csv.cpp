#include "cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace spt::cli {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  const std::string raw(buf);
  const auto e = raw.find('e');
  const std::string mantissa = raw.substr(0, e);
  std::string exponent = raw.substr(e + 1);

  const bool negative = exponent[0] == '-';
  std::size_t i = (exponent[0] == '+' || exponent[0] == '-') ? 1 : 0;
  while (i + 1 < exponent.size() && exponent[i] == '0') ++i;
  return mantissa + "e" + (negative ? "-" : "") + exponent.substr(i);
}

std::string render_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const OutputTable& table, const std::string& out_path) {
  const std::string body = render_csv(table);
  if (out_path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot write output file '" + out_path + "'");
  }
  out << body;
  out.flush();
  if (!out) {
    throw ConfigError("write failed for output file '" + out_path + "'");
  }
}

}  // namespace spt::cli
