#include "spt/power_series.hpp"

#include <cmath>
#include <stdexcept>

namespace spt {

PowerSeries::PowerSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) {
    throw std::invalid_argument("PowerSeries: need at least the constant term");
  }
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) {
    throw std::invalid_argument("PowerSeries: order must be >= 0");
  }
  return PowerSeries(std::vector<double>(static_cast<size_t>(order) + 1, 0.0));
}

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("PowerSeries: mixed truncation orders");
  }
}
}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  std::vector<double> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] + rhs.c_[k];
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  std::vector<double> out(c_.size(), 0.0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0.0) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) {
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::scaled(double factor) const {
  std::vector<double> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = factor * c_[k];
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0.0) {
    throw std::invalid_argument(
        "PowerSeries::reciprocal: constant term must be nonzero");
  }
  // b_0 = 1/a_0;  b_n = -(1/a_0) sum_{k=1}^{n} a_k b_{n-k}
  std::vector<double> b(c_.size(), 0.0);
  b[0] = 1.0 / c_[0];
  for (size_t n = 1; n < c_.size(); ++n) {
    double acc = 0.0;
    for (size_t k = 1; k <= n; ++k) acc += c_[k] * b[n - k];
    b[n] = -acc / c_[0];
  }
  return PowerSeries(std::move(b));
}

double PowerSeries::evaluate(double x) const {
  double acc = 0.0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Complex PowerSeries::evaluate(Complex x) const {
  Complex acc{0.0, 0.0};
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

PowerSeries sinh_over_x_series(int order) {
  if (order < 0) {
    throw std::invalid_argument("sinh_over_x_series: order must be >= 0");
  }
  std::vector<double> c(static_cast<size_t>(order) + 1, 0.0);
  double inv_factorial = 1.0;  // 1/(2k+1)! built incrementally
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) inv_factorial /= (2.0 * k) * (2.0 * k + 1.0);
    c[static_cast<size_t>(2 * k)] = inv_factorial;
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_reciprocal_sinh_ratio(int order) {
  return sinh_over_x_series(order).reciprocal();
}

}  // namespace spt
