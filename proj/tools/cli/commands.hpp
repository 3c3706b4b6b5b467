#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace spt::cli {

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

using RowFn = std::function<std::vector<double>(double)>;

// One row per abscissa, assembled by input index so the emitted order
// never depends on execution order. `order`, when given, permutes the
// evaluation sequence (exercised by tests standing in for a concurrent
// scheduler).
std::vector<std::vector<double>> evaluate_rows(
    const std::vector<double>& points, const RowFn& fn,
    const std::vector<std::size_t>* order = nullptr);

// Dispatch on cfg.command; throws ConfigError for semantically invalid
// parameter combinations and lets numerical errors propagate.
OutputTable run_command(const RunConfig& cfg);

}  // namespace spt::cli
