#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "spt/errors.hpp"
#include "spt/proper_time_kernel.hpp"
#include "spt/quadrature.hpp"
#include "spt/semiclassics.hpp"

using namespace spt;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureSpec kSpec{};
}  // namespace

TEST_CASE("turning points bracket the forbidden strip") {
  const TunnelingSetup level{2.0, FieldConfig::from_chi(1.0, 1.0)};
  const TurningPoints tp = turning_points(level);
  CHECK(tp.a == 1.0);
  CHECK(tp.b == 3.0);
  CHECK(tp.width() == 2.0);

  // threshold level: the strip starts at the origin
  const TurningPoints at_gap =
      turning_points({1.0, FieldConfig::from_chi(0.5, 1.0)});
  CHECK(at_gap.a == 0.0);
  CHECK(at_gap.b == 4.0);

  const FieldConfig heavy = FieldConfig::from_chi(0.7, 1.3);
  const TurningPoints generic = turning_points({0.4, heavy});
  CHECK(generic.width() ==
        doctest::Approx(2.0 * heavy.mass() / heavy.a()).epsilon(1e-14));

  CHECK_THROWS_AS(turning_points({1.0, FieldConfig::from_chi(0.0, 1.0)}),
                  std::domain_error);
}

TEST_CASE("barrier integral equals the closed form and scales as m^2/eE") {
  const TunnelingSetup unit{1.5, FieldConfig::from_chi(1.0, 1.0)};
  CHECK(wkb_exponent(unit, kSpec) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-12));

  const TunnelingSetup weak{1.5, FieldConfig::from_chi(0.5, 1.0)};
  CHECK(wkb_exponent(weak, kSpec) == doctest::Approx(kPi).epsilon(1e-12));

  const FieldConfig heavy = FieldConfig::from_chi(0.25, 2.0);
  CHECK(wkb_exponent({3.0, heavy}, kSpec) ==
        doctest::Approx(wkb_exponent_closed_form(heavy)).epsilon(1e-12));
  CHECK(wkb_exponent_closed_form(heavy) == 2.0 * kPi);

  CHECK_THROWS_AS(wkb_exponent({1.0, FieldConfig::from_chi(0.0, 1.0)}, kSpec),
                  std::domain_error);
}

TEST_CASE("barrier integral does not depend on the level") {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  const double reference = wkb_exponent({1.0, cfg}, kSpec);
  for (double p0 : {0.0, -2.0, 1.7, 5.0}) {
    CHECK(wkb_exponent({p0, cfg}, kSpec) == reference);
  }
}

TEST_CASE("substituted integrand agrees with the raw barrier quadrature") {
  // Integrate sqrt(m^2 - (p0 - eE x)^2) in x directly, square-root
  // endpoints and all; the clamp only absorbs rounding below machine
  // precision.
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  const double p0 = 1.4;
  const TurningPoints tp = turning_points({p0, cfg});
  auto raw = [&](double x) {
    const double kin = p0 - cfg.a() * x;
    return Complex(std::sqrt(std::max(0.0, cfg.mass() * cfg.mass() - kin * kin)),
                   0.0);
  };
  const QuadratureSpec loose{1e-9, 1e-12, 4000};
  const double direct = adaptive_quad(raw, tp.a, tp.b, loose).value.real();
  CHECK(direct == doctest::Approx(kPi / 2.0).epsilon(1e-8));
}

TEST_CASE("one-pair rate matches the leading residue term") {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  CHECK(sauter_rate(cfg) == pair_rate_residues(cfg, 1).terms[0]);
  CHECK(sauter_rate(cfg) ==
        doctest::Approx(std::exp(-kPi) / (8.0 * kPi * kPi * kPi))
            .epsilon(1e-15));

  // rate carries the squared barrier-penetration amplitude
  for (double chi : {0.8, 0.3}) {
    const FieldConfig c = FieldConfig::from_chi(chi, 1.0);
    const double expected = c.a() * c.a() / (8.0 * kPi * kPi * kPi) *
                            std::exp(-2.0 * wkb_exponent_closed_form(c));
    CHECK(sauter_rate(c) == doctest::Approx(expected).epsilon(1e-14));
  }

  CHECK(sauter_rate(FieldConfig::from_chi(0.0, 1.0)) == 0.0);
}

TEST_CASE("force law: rest state is kicked along the field") {
  const FieldConfig cfg = FieldConfig::from_chi(0.7, 1.0);
  TrajectoryState rest;
  rest.u = {1.0, 0.0, 0.0, 0.0};
  const TrajectoryState d = lorentz_rhs(rest, cfg);
  CHECK(d.x == rest.u);
  CHECK(d.u[0] == 0.0);
  CHECK(d.u[1] == 0.0);
  CHECK(d.u[2] == 0.0);
  CHECK(d.u[3] == cfg.a() / cfg.mass());

  // no field, no force
  TrajectoryState moving;
  moving.u = {1.2, 0.3, -0.1, 0.5};
  const TrajectoryState free = lorentz_rhs(moving, FieldConfig(1.0, 0.0, 1.0));
  CHECK(free.u == std::array<double, 4>{0.0, 0.0, 0.0, 0.0});

  // antisymmetry: the force stays orthogonal to the four-velocity
  const TrajectoryState forced = lorentz_rhs(moving, cfg);
  const double inner = moving.u[0] * forced.u[0] - moving.u[1] * forced.u[1] -
                       moving.u[2] * forced.u[2] - moving.u[3] * forced.u[3];
  CHECK(std::abs(inner) < 1e-15);
}

TEST_CASE("worldline follows the hyperbola") {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  const TrajectoryState init = hyperbola_initial_state(cfg);
  CHECK(init.x[3] == cfg.mass() / cfg.a());
  CHECK(init.velocity_norm() == 1.0);

  const auto path = integrate_trajectory(init, 5.0, 1e-3, cfg);
  REQUIRE(path.size() == 5001);
  const double k = cfg.a() / cfg.mass();
  const double radius = cfg.mass() / cfg.a();
  double worst_pos = 0.0, worst_norm = 0.0, worst_invariant = 0.0;
  for (const auto& [s, st] : path) {
    worst_pos = std::max(worst_pos,
                         std::abs(st.x[0] - radius * std::sinh(k * s)));
    worst_pos = std::max(worst_pos,
                         std::abs(st.x[3] - radius * std::cosh(k * s)));
    worst_norm = std::max(worst_norm, std::abs(st.velocity_norm() - 1.0));
    // x3^2 - t^2 = (m/eE)^2 along the orbit
    worst_invariant = std::max(
        worst_invariant,
        std::abs(k * k * (st.x[3] * st.x[3] - st.x[0] * st.x[0]) - 1.0));
  }
  CHECK(worst_pos < 1e-8);
  CHECK(worst_norm < 1e-10);
  CHECK(worst_invariant < 1e-8);
}

TEST_CASE("transverse motion decouples") {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  TrajectoryState init = hyperbola_initial_state(cfg);
  const double v = 0.3;
  init.u = {std::sqrt(1.0 + v * v), v, 0.0, 0.0};
  const auto path = integrate_trajectory(init, 2.0, 1e-3, cfg);
  for (const auto& [s, st] : path) {
    CHECK(st.u[1] == v);
    CHECK(std::abs(st.x[1] - v * s) < 1e-11);
    CHECK(std::abs(st.velocity_norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("worldline integration rejects bad input and runaway growth") {
  const FieldConfig cfg = FieldConfig::from_chi(1.0, 1.0);
  TrajectoryState bad = hyperbola_initial_state(cfg);
  bad.u = {1.0, 0.0, 0.0, 0.5};
  CHECK_THROWS_AS(integrate_trajectory(bad, 1.0, 1e-3, cfg),
                  std::domain_error);

  const TrajectoryState init = hyperbola_initial_state(cfg);
  CHECK_THROWS_AS(integrate_trajectory(init, 1.0, 0.0, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_trajectory(init, -1.0, 1e-3, cfg),
                  std::invalid_argument);
  // cosh(eE s / m) passes the norm guard near s ~ 28
  CHECK_THROWS_AS(integrate_trajectory(init, 30.0, 1e-2, cfg),
                  StateBlowupError);
}

TEST_CASE("pair separation scale") {
  CHECK(overlap_scale(FieldConfig::from_chi(2.0, 1.0)) == 1.0);
  CHECK(overlap_scale(FieldConfig::from_chi(0.01, 1.0)) ==
        doctest::Approx(200.0).epsilon(1e-15));
  // depends on the field only through chi
  CHECK(overlap_scale(FieldConfig::from_chi(0.5, 3.0)) ==
        doctest::Approx(4.0).epsilon(1e-15));
}
