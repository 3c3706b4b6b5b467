#include "spt/propagators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spt/errors.hpp"

namespace spt {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_s(double s, const char* where) {
  if (!(s > 0.0)) {
    throw std::domain_error(std::string(where) +
                            ": proper time must be positive");
  }
}

}  // namespace

MomentumPoint momentum_with_p_squared(double p2) {
  MomentumPoint p;
  if (p2 >= 0.0) {
    p.p = {std::sqrt(p2), 0.0, 0.0, 0.0};
  } else {
    p.p = {0.0, std::sqrt(-p2), 0.0, 0.0};
  }
  return p;
}

Complex free_resolvent(const MomentumPoint& p, Complex z, double pole_floor) {
  const Complex denom = Complex(p.p_squared(), 0.0) - z;
  if (std::abs(denom) < pole_floor) {
    throw PoleHitError("free_resolvent: p^2 - z below pole floor");
  }
  return 1.0 / denom;
}

Complex onshell_green_momentum(const MomentumPoint& p, double m_squared,
                               BoundaryCondition bc, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::domain_error("onshell_green_momentum: eps must be positive");
  }
  const double sign = bc == BoundaryCondition::Feynman ? 1.0 : -1.0;
  return 1.0 / Complex(p.p_squared() - m_squared, sign * epsilon);
}

TransformResult onshell_from_proper_time(const MomentumPoint& p,
                                         double m_squared,
                                         BoundaryCondition bc, double epsilon,
                                         double T,
                                         const QuadratureSpec& spec) {
  if (!(epsilon > 0.0)) {
    throw std::domain_error("onshell_from_proper_time: eps must be positive");
  }
  if (!(T > 0.0)) {
    throw std::domain_error(
        "onshell_from_proper_time: truncation must be positive");
  }
  const double delta = p.p_squared() - m_squared;
  // Dyson is the s -> -s image of Feynman: both reduce to a decaying
  // integral over [0, T] with conjugate frequency and flipped prefactor.
  const double sign = bc == BoundaryCondition::Feynman ? 1.0 : -1.0;
  const auto integrand = [delta, epsilon, sign](double s) {
    return std::exp(Complex(-epsilon * s, sign * delta * s));
  };
  // A single panel over [0, T] can alias: the error estimate is blind once
  // a panel spans many oscillation periods. Cap the phase advance per chunk
  // at 2*pi so the estimator always sees the oscillation.
  const double cycles = T * std::abs(delta) / (2.0 * kPi);
  const int chunks =
      std::max(1, static_cast<int>(std::min(4096.0, std::ceil(cycles))));
  Complex total{0.0, 0.0};
  double lo = 0.0;
  for (int i = 1; i <= chunks; ++i) {
    const double hi = i == chunks ? T : T * i / chunks;
    total += adaptive_quad(integrand, lo, hi, spec).value;
    lo = hi;
  }

  TransformResult out;
  out.value = Complex(0.0, -sign) * total;
  out.tail_bound = std::exp(-epsilon * T) / epsilon;
  out.truncation_warning = out.tail_bound > spec.abs_tol;
  return out;
}

Complex free_kernel_1d(double delta, double s) {
  require_positive_s(s, "free_kernel_1d");
  const double mag = std::sqrt(kPi / s) / (2.0 * kPi);
  return mag * std::exp(Complex(0.0, delta * delta / (4.0 * s) - kPi / 4.0));
}

Complex oscillator_sector_kernel(double x0, double x3, double y0, double y3,
                                 double s, const FieldConfig& cfg) {
  require_positive_s(s, "oscillator_sector_kernel");
  const double a = cfg.a();
  const double d0 = x0 - y0;
  const double d3 = x3 - y3;

  double prefactor;
  double coth_scale;  // (a/4) coth(as), -> 1/(4s) for a -> 0
  double drift;       // (a/2)(x3 + y3)
  if (a == 0.0) {
    prefactor = 1.0 / (4.0 * kPi * s);
    coth_scale = 1.0 / (4.0 * s);
    drift = 0.0;
  } else {
    const double as = a * s;
    if (as > 700.0) {
      return Complex(0.0, 0.0);  // prefactor underflows before coth matters
    }
    prefactor = a / (4.0 * kPi * std::sinh(as));
    coth_scale = a / (4.0 * std::tanh(as));
    drift = 0.5 * a * (x3 + y3);
  }

  const double phase = -drift * d0 - coth_scale * (d3 * d3 - d0 * d0);
  const Complex value = prefactor * std::exp(Complex(0.0, phase));
  require_finite(value, "oscillator_sector_kernel");
  return value;
}

Complex offshell_retarded_kernel(const FourVector& x, const FourVector& y,
                                 double s, const FieldConfig& cfg) {
  if (s <= 0.0) {
    return Complex(0.0, 0.0);
  }
  const Complex value = free_kernel_1d(x[1] - y[1], s) *
                        free_kernel_1d(x[2] - y[2], s) *
                        oscillator_sector_kernel(x[0], x[3], y[0], y[3], s, cfg);
  require_finite(value, "offshell_retarded_kernel");
  return value;
}

Complex offshell_advanced_kernel(const FourVector& x, const FourVector& y,
                                 double s, const FieldConfig& cfg) {
  if (s >= 0.0) {
    return Complex(0.0, 0.0);
  }
  return std::conj(offshell_retarded_kernel(x, y, -s, cfg));
}

OffshellKernelSample sample_offshell_kernel(const FourVector& x,
                                            const FourVector& y, double s,
                                            const FieldConfig& cfg) {
  return {x, y, s, offshell_retarded_kernel(x, y, s, cfg)};
}

double gamow_reconstruction_check(double u, double u_prime, double s,
                                  const FieldConfig& cfg,
                                  const SpectralTruncation& trunc) {
  require_positive_s(s, "gamow_reconstruction_check");
  const double a = cfg.a();
  const Complex closed = mehler_kernel(u, u_prime, s, a);
  const Complex truncated = spectral_kernel_sum(u, u_prime, s, a, trunc);
  return std::abs(truncated - closed) / std::abs(closed);
}

}  // namespace spt
