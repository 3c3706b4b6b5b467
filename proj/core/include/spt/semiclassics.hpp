#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spt/field_config.hpp"
#include "spt/quadrature.hpp"

namespace spt {

// Tunneling problem for a level of energy p0 in the constant field.
struct TunnelingSetup {
  double p0;  // units of mass
  FieldConfig cfg;
};

// Classically forbidden strip a < x^3 < b for the barrier
// m^2 - (p0 - eE x)^2.
struct TurningPoints {
  double a;
  double b;
  double width() const { return b - a; }
};

// Point on a worldline: position x^mu and four-velocity u^mu, metric
// signature (+,-,-,-).
struct TrajectoryState {
  std::array<double, 4> x{};
  std::array<double, 4> u{};

  double velocity_norm() const {
    return u[0] * u[0] - u[1] * u[1] - u[2] * u[2] - u[3] * u[3];
  }
};

// a = (p0 - m)/eE, b = (p0 + m)/eE; width 2m/eE = 2/(chi m).
TurningPoints turning_points(const TunnelingSetup& setup);

// Barrier integral int_a^b sqrt(m^2 - (p0 - eE x)^2) dx, evaluated after
// the substitutions t = (p0 - eE x)/m and t = sin(theta) that remove the
// square-root endpoint behavior; equals pi m^2/(2 eE) independent of p0.
double wkb_exponent(const TunnelingSetup& setup, const QuadratureSpec& spec);

double wkb_exponent_closed_form(const FieldConfig& cfg);  // pi m^2/(2 eE)

// One-pair creation rate (eE)^2/(8 pi^3) * exp(-pi m^2/eE): the
// barrier-penetration exponent is exp(-2 * wkb_exponent).
double sauter_rate(const FieldConfig& cfg);

// Proper-time equation of motion du^mu/ds = (e/m) F^mu_nu u^nu for the
// constant field: du^0/ds = (eE/m) u^3, du^3/ds = (eE/m) u^0, transverse
// components free. Antisymmetry of F makes u.u a constant of motion.
TrajectoryState lorentz_rhs(const TrajectoryState& state,
                            const FieldConfig& cfg);

// Canonical hyperbola initial condition: x^3 = m/eE at s = 0, at rest.
TrajectoryState hyperbola_initial_state(const FieldConfig& cfg);

// RK4 integration of the worldline from s = 0 to s_max at fixed step h.
// The exact orbit is t = (m/eE) sinh(eEs/m), x^3 = (m/eE) cosh(eEs/m).
// Requires the initial state to satisfy u.u = 1.
std::vector<std::pair<double, TrajectoryState>> integrate_trajectory(
    const TrajectoryState& initial, double s_max, double h,
    const FieldConfig& cfg);

// Dimensionless pair-separation scale 2 m^2/eE = 2/chi at which the
// field becomes critical for overlap of the created pair.
double overlap_scale(const FieldConfig& cfg);

}  // namespace spt
