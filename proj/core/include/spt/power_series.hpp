#pragma once

#include <vector>

#include "spt/complex_value.hpp"

namespace spt {

// Truncated power series sum_{k=0}^{K} c_k x^k. All arithmetic truncates
// consistently at the common order K; mixing orders is a usage error.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<double> coeffs);
  static PowerSeries zero(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  const std::vector<double>& coefficients() const { return c_; }

  PowerSeries operator+(const PowerSeries& rhs) const;
  PowerSeries operator*(const PowerSeries& rhs) const;  // truncated product
  PowerSeries scaled(double factor) const;

  // Series division: 1 / this, requires a unit constant term scale
  // (c0 != 0). Result carries the same order.
  PowerSeries reciprocal() const;

  double evaluate(double x) const;
  Complex evaluate(Complex x) const;

 private:
  std::vector<double> c_;
};

// Coefficients of sinh(x)/x = sum_k x^{2k} / (2k+1)! up to x^order.
PowerSeries sinh_over_x_series(int order);

// Coefficients of x/sinh(x) up to x^order, computed by series division.
// Leading terms: 1 - x^2/6 + 7 x^4/360 - 31 x^6/15120 + ...
PowerSeries series_reciprocal_sinh_ratio(int order);

}  // namespace spt
