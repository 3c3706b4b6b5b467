#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <sstream>
#include <vector>

#include "spt/errors.hpp"

namespace spt {

struct OdeOptions {
  double blowup_bound = 1e12;  // any |y_i| beyond this aborts the run
};

using OdeRhs =
    std::function<void(double s, std::span<const double> y, std::span<double> dy)>;

struct OdeSample {
  double s;
  std::vector<double> y;
};

// Classical fixed-step RK4 from s0 to s1 (s1 >= s0). The last step is
// shortened so the final sample lands exactly on s1. Global error O(h^4).
// Returns every step including the initial state.
std::vector<OdeSample> ode_integrate(const OdeRhs& rhs,
                                     std::span<const double> y0, double s0,
                                     double s1, double h,
                                     const OdeOptions& opts = {});

}  // namespace spt
