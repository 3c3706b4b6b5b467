#pragma once

#include <functional>

#include "spt/complex_value.hpp"

namespace spt {

// Tolerances and budget for adaptive quadrature. Convergence criterion:
// estimated error <= max(abs_tol, rel_tol * |result|).
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
};

// Ray from the origin into the complex plane: s = exp(i*angle) * t,
// t in [0, truncation]. angle must lie strictly inside (-pi/2, pi/2).
struct RayContour {
  double angle;
  double truncation;
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double error = 0.0;      // estimated absolute error of `value`
  int subdivisions = 0;    // bisections performed
  bool truncation_warning = false;  // ray tail was not negligible at T
};

// Adaptive Gauss-Kronrod (G7,K15) with bisection of the worst interval.
// Throws NonConvergenceError when the budget is exhausted before the
// tolerance is met, std::invalid_argument on a bad spec or interval.
QuadResult adaptive_quad(const std::function<Complex(double)>& f, double lo,
                         double hi, const QuadratureSpec& spec);

// Integral of f along the rotated ray:
//   int_0^T f(e^{i theta} t) e^{i theta} dt.
// Sets truncation_warning when |f| at the endpoint exceeds abs_tol.
QuadResult ray_quad(const std::function<Complex(Complex)>& f,
                    const RayContour& contour, const QuadratureSpec& spec);

}  // namespace spt
