#include "spt/ode.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

namespace {

void check_state(std::span<const double> y, double bound, double s) {
  for (double v : y) {
    if (!std::isfinite(v) || std::abs(v) > bound) {
      std::ostringstream msg;
      msg << "ode_integrate: state left |y| <= " << bound << " at s = " << s;
      throw StateBlowupError(msg.str());
    }
  }
}

}  // namespace

std::vector<OdeSample> ode_integrate(const OdeRhs& rhs,
                                     std::span<const double> y0, double s0,
                                     double s1, double h,
                                     const OdeOptions& opts) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("ode_integrate: step must be positive");
  }
  if (!(s1 >= s0) || !std::isfinite(s0) || !std::isfinite(s1)) {
    throw std::invalid_argument("ode_integrate: need finite s1 >= s0");
  }
  if (y0.empty()) {
    throw std::invalid_argument("ode_integrate: empty state");
  }

  const size_t dim = y0.size();
  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  std::vector<OdeSample> out;
  const double span_len = s1 - s0;
  const long n_steps = std::max(1L, std::lround(std::ceil(span_len / h - 1e-12)));
  out.reserve(static_cast<size_t>(n_steps) + 1);

  check_state(y, opts.blowup_bound, s0);
  out.push_back({s0, y});
  if (span_len == 0.0) return out;

  double s = s0;
  for (long i = 0; i < n_steps; ++i) {
    const double step = (i == n_steps - 1) ? (s1 - s) : h;
    rhs(s, y, k1);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * step * k1[j];
    rhs(s + 0.5 * step, tmp, k2);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + 0.5 * step * k2[j];
    rhs(s + 0.5 * step, tmp, k3);
    for (size_t j = 0; j < dim; ++j) tmp[j] = y[j] + step * k3[j];
    rhs(s + step, tmp, k4);
    for (size_t j = 0; j < dim; ++j) {
      y[j] += step / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    s = (i == n_steps - 1) ? s1 : s0 + (i + 1) * h;
    check_state(y, opts.blowup_bound, s);
    out.push_back({s, y});
  }
  return out;
}

}  // namespace spt
