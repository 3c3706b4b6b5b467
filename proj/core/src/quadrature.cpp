#include "spt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace spt {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr int kGK = 8;
constexpr double kXgk[kGK] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[kGK] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct PanelEstimate {
  Complex value;
  double error;
};

PanelEstimate gk15(const std::function<Complex(double)>& f, double lo,
                   double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  Complex kronrod{0.0, 0.0};
  Complex gauss{0.0, 0.0};
  for (int j = 0; j < kGK; ++j) {
    const double dx = h * kXgk[j];
    Complex fsum;
    if (j == kGK - 1) {
      fsum = f(c);
    } else {
      fsum = f(c - dx) + f(c + dx);
    }
    if (!is_finite(fsum)) {
      std::ostringstream msg;
      msg << "adaptive_quad: integrand non-finite near x = " << c;
      throw NonConvergenceError(msg.str());
    }
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * fsum;
    }
  }
  kronrod *= h;
  gauss *= h;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Interval {
  double lo, hi;
  Complex value;
  double error;
};

struct WorseError {
  bool operator()(const Interval& a, const Interval& b) const {
    return a.error < b.error;
  }
};

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) ||
      spec.max_subdivisions < 1) {
    throw std::invalid_argument(
        "QuadratureSpec: tolerances must be positive and the subdivision "
        "budget at least 1");
  }
}

}  // namespace

QuadResult adaptive_quad(const std::function<Complex(double)>& f, double lo,
                         double hi, const QuadratureSpec& spec) {
  validate(spec);
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("adaptive_quad: need finite lo < hi");
  }

  std::priority_queue<Interval, std::vector<Interval>, WorseError> heap;
  auto first = gk15(f, lo, hi);
  heap.push({lo, hi, first.value, first.error});

  Complex total = first.value;
  double live_error = first.error;
  double frozen_error = 0.0;  // intervals refined down to roundoff
  int bisections = 0;
  const double eps = std::numeric_limits<double>::epsilon();

  auto target = [&]() {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };

  while (live_error + frozen_error > target() && !heap.empty()) {
    if (bisections >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "adaptive_quad: tolerance " << target() << " not reached after "
          << bisections << " subdivisions (error estimate "
          << live_error + frozen_error << ")";
      throw NonConvergenceError(msg.str());
    }
    Interval worst = heap.top();
    heap.pop();
    live_error -= worst.error;

    const double mid = 0.5 * (worst.lo + worst.hi);
    // Width at roundoff: cannot improve this panel any further.
    if (mid <= worst.lo || mid >= worst.hi ||
        worst.error <= 4.0 * eps * std::abs(worst.value)) {
      frozen_error += worst.error;
      continue;
    }

    auto left = gk15(f, worst.lo, mid);
    auto right = gk15(f, mid, worst.hi);
    ++bisections;
    total += left.value + right.value - worst.value;
    live_error += left.error + right.error;
    heap.push({worst.lo, mid, left.value, left.error});
    heap.push({mid, worst.hi, right.value, right.error});
  }

  const double err = live_error + frozen_error;
  if (err > target()) {
    std::ostringstream msg;
    msg << "adaptive_quad: error estimate " << err
        << " stuck above tolerance " << target()
        << " (roundoff-limited integrand)";
    throw NonConvergenceError(msg.str());
  }
  require_finite(total, "adaptive_quad");
  return {total, err, bisections, false};
}

QuadResult ray_quad(const std::function<Complex(Complex)>& f,
                    const RayContour& contour, const QuadratureSpec& spec) {
  constexpr double kHalfPi = 1.57079632679489661923;
  if (!(contour.angle > -kHalfPi) || !(contour.angle < kHalfPi) ||
      !std::isfinite(contour.angle)) {
    throw std::invalid_argument(
        "ray_quad: angle must lie strictly inside (-pi/2, pi/2)");
  }
  if (!(contour.truncation > 0.0) || !std::isfinite(contour.truncation)) {
    throw std::invalid_argument("ray_quad: truncation must be positive");
  }

  const Complex phase = std::polar(1.0, contour.angle);
  auto g = [&](double t) { return f(phase * t) * phase; };
  QuadResult result = adaptive_quad(g, 0.0, contour.truncation, spec);

  const Complex tail = f(phase * contour.truncation);
  if (is_finite(tail) && std::abs(tail) > spec.abs_tol) {
    result.truncation_warning = true;
  }
  return result;
}

}  // namespace spt
