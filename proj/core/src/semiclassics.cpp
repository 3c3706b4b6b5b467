#include "spt/semiclassics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spt/complex_value.hpp"
#include "spt/errors.hpp"
#include "spt/ode.hpp"

namespace spt {

namespace {

constexpr double kPi = std::numbers::pi;

void check_field(const TunnelingSetup& setup) {
  if (setup.cfg.a() <= 0.0) {
    throw std::domain_error("turning_points: field must be positive");
  }
}

}  // namespace

TurningPoints turning_points(const TunnelingSetup& setup) {
  check_field(setup);
  const double a = setup.cfg.a();
  return {(setup.p0 - setup.cfg.mass()) / a, (setup.p0 + setup.cfg.mass()) / a};
}

double wkb_exponent(const TunnelingSetup& setup, const QuadratureSpec& spec) {
  check_field(setup);
  const double m = setup.cfg.mass();
  const double a = setup.cfg.a();
  // x -> t = (p0 - eE x)/m maps [a,b] to [-1,1] with dx = -(m/eE) dt, then
  // t = sin(theta) absorbs sqrt(1-t^2); integrand becomes (m^2/eE) cos^2.
  const double scale = m * m / a;
  const auto integrand = [scale](double theta) {
    const double c = std::cos(theta);
    return Complex(scale * c * c, 0.0);
  };
  const QuadResult r = adaptive_quad(integrand, -kPi / 2.0, kPi / 2.0, spec);
  return r.value.real();
}

double wkb_exponent_closed_form(const FieldConfig& cfg) {
  return kPi * cfg.mass() * cfg.mass() / (2.0 * cfg.a());
}

double sauter_rate(const FieldConfig& cfg) {
  const double a = cfg.a();
  if (a <= 0.0) {
    return 0.0;
  }
  return a * a / (8.0 * kPi * kPi * kPi) *
         std::exp(-kPi * cfg.mass() * cfg.mass() / a);
}

TrajectoryState lorentz_rhs(const TrajectoryState& state,
                            const FieldConfig& cfg) {
  const double k = cfg.a() / cfg.mass();
  TrajectoryState d;
  d.x = state.u;
  d.u = {k * state.u[3], 0.0, 0.0, k * state.u[0]};
  return d;
}

TrajectoryState hyperbola_initial_state(const FieldConfig& cfg) {
  TrajectoryState s0;
  s0.x = {0.0, 0.0, 0.0, cfg.mass() / cfg.a()};
  s0.u = {1.0, 0.0, 0.0, 0.0};
  return s0;
}

std::vector<std::pair<double, TrajectoryState>> integrate_trajectory(
    const TrajectoryState& initial, double s_max, double h,
    const FieldConfig& cfg) {
  const double norm0 = initial.velocity_norm();
  if (std::abs(norm0 - 1.0) > 1e-9) {
    throw std::domain_error(
        "integrate_trajectory: initial four-velocity must satisfy u.u = 1");
  }

  const auto rhs = [&cfg](double /*s*/, std::span<const double> y,
                          std::span<double> dydt) {
    TrajectoryState st;
    for (int i = 0; i < 4; ++i) {
      st.x[i] = y[i];
      st.u[i] = y[4 + i];
    }
    const TrajectoryState d = lorentz_rhs(st, cfg);
    for (int i = 0; i < 4; ++i) {
      dydt[i] = d.x[i];
      dydt[4 + i] = d.u[i];
    }
  };

  std::vector<double> y0(8);
  for (int i = 0; i < 4; ++i) {
    y0[i] = initial.x[i];
    y0[4 + i] = initial.u[i];
  }

  const std::vector<OdeSample> samples =
      ode_integrate(rhs, y0, 0.0, s_max, h, OdeOptions{});

  std::vector<std::pair<double, TrajectoryState>> out;
  out.reserve(samples.size());
  for (const OdeSample& sample : samples) {
    TrajectoryState st;
    for (int i = 0; i < 4; ++i) {
      st.x[i] = sample.y[i];
      st.u[i] = sample.y[4 + i];
    }
    out.emplace_back(sample.s, st);
  }
  return out;
}

double overlap_scale(const FieldConfig& cfg) {
  return 2.0 * cfg.mass() * cfg.mass() / cfg.a();
}

}  // namespace spt
