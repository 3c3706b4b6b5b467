#include "spt/proper_time_kernel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spt/power_series.hpp"

namespace spt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// x/sinh(x) - 1 + x^2/6 = sum_{k>=2} c_{2k} x^{2k}; the direct form loses
// all significant digits below |x| ~ 0.5, so evaluate the tail series
// there. Order 24 leaves a relative remainder ~ (0.5/pi)^22 at theseam.
const PowerSeries& subtracted_tail_series() {
  static const PowerSeries tail = [] {
    PowerSeries full = series_reciprocal_sinh_ratio(24);
    std::vector<double> c = full.coefficients();
    c[0] = 0.0;  // the two subtractions remove exactly these entries
    c[2] = 0.0;
    return PowerSeries(std::move(c));
  }();
  return tail;
}

double ray_truncation(double m, double angle) {
  // Tail of e^{-i m^2 s} on the ray decays like exp(-m^2 t sin(-angle)).
  return 60.0 / (m * m * std::sin(-angle));
}

void check_ray_angle(double angle, double min_pole_angle) {
  constexpr double kHalfPi = 1.57079632679489661923;
  if (!(angle < 0.0) || !(angle > -kHalfPi)) {
    throw std::domain_error(
        "efflag ray: angle must lie strictly between the real axis and the "
        "negative imaginary axis");
  }
  // Poles of 1/sinh(as) sit along the -i axis; the closest one subtends
  // angle + pi/2 from the ray.
  if (angle + kHalfPi < min_pole_angle) {
    std::ostringstream msg;
    msg << "efflag ray: angle " << angle
        << " passes within the guard distance of the pole string";
    throw PoleProximityError(msg.str());
  }
}

Complex renormalized_ray_integral(const FieldConfig& cfg,
                                  const QuadratureSpec& spec,
                                  double ray_angle) {
  const double a = cfg.a();
  const double m2 = cfg.mass() * cfg.mass();
  const Complex phase = std::polar(1.0, ray_angle);
  auto integrand = [&](double t) -> Complex {
    if (t == 0.0) return {0.0, 0.0};  // integrand ~ 7 a^4 s / 360 near 0
    const Complex s = phase * t;
    const Complex x = a * s;
    return subtracted_sinh_kernel(x) / (s * s * s) *
           std::exp(Complex(0.0, -m2) * s) * phase;
  };
  const RayContour contour{ray_angle, ray_truncation(cfg.mass(), ray_angle)};
  // Reuse the ray machinery directly on the parametrized integrand.
  return adaptive_quad([&](double t) { return integrand(t); }, 0.0,
                       contour.truncation, spec)
      .value;
}

}  // namespace

Complex subtracted_sinh_kernel(Complex x) {
  const double mag = std::abs(x);
  if (mag < 0.5) {
    return subtracted_tail_series().evaluate(x);
  }
  Complex ratio;
  if (x.real() > 700.0) {
    // sinh overflows; x/sinh x = 2x e^{-x} up to e^{-2 Re x} corrections.
    ratio = 2.0 * x * std::exp(-x);
  } else if (x.real() < -700.0) {
    ratio = -2.0 * x * std::exp(x);
  } else {
    ratio = x / std::sinh(x);
  }
  return ratio - 1.0 + x * x / 6.0;
}

Complex kernel_diag(double s, const FieldConfig& cfg) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("kernel_diag: s must be positive");
  }
  const double a = cfg.a();
  const double denom = 16.0 * kPi * kPi * s * s;
  double ratio = 1.0;
  if (a > 0.0) {
    const double x = a * s;
    // Guarded form keeps the factor finite while sinh would overflow.
    ratio = (x > 700.0) ? 2.0 * x * std::exp(-x) : x / std::sinh(x);
  }
  return Complex(0.0, -ratio / denom);
}

double heisenberg_euler_quartic(const FieldConfig& cfg) {
  const double m = cfg.mass();
  const double chi = cfg.chi();
  const double chi2 = chi * chi;
  return 7.0 / (5760.0 * kPi * kPi) * (m * m) * (m * m) * chi2 * chi2;
}

double efflag_real_renormalized(const FieldConfig& cfg,
                                const QuadratureSpec& spec, double ray_angle) {
  check_ray_angle(ray_angle, 0.05);
  if (cfg.a() == 0.0) return 0.0;  // integrand vanishes identically
  const Complex integral = renormalized_ray_integral(cfg, spec, ray_angle);
  return -integral.real() / (16.0 * kPi * kPi);
}

double efflag_imag_quadrature(const FieldConfig& cfg,
                              const QuadratureSpec& spec, double ray_angle,
                              double min_pole_angle) {
  check_ray_angle(ray_angle, min_pole_angle);
  if (cfg.a() == 0.0) return 0.0;
  const Complex integral = renormalized_ray_integral(cfg, spec, ray_angle);
  // Pair-creation density w = 2 Im L: the vacuum persistence probability
  // is |exp(i S)|^2 = exp(-2 Im L * V T).
  return 2.0 * (-integral.imag() / (16.0 * kPi * kPi));
}

RateSeries pair_rate_residues(const FieldConfig& cfg, int n_terms) {
  if (!(cfg.a() > 0.0)) {
    throw std::domain_error("pair_rate_residues: requires E > 0");
  }
  if (n_terms < 1) {
    throw std::invalid_argument("pair_rate_residues: need n_terms >= 1");
  }
  const double a = cfg.a();
  const double m2 = cfg.mass() * cfg.mass();
  const double prefactor = a * a / (8.0 * kPi * kPi * kPi);

  RateSeries series;
  series.terms.reserve(static_cast<size_t>(n_terms));
  series.partial_sums.reserve(static_cast<size_t>(n_terms));
  series.underflowed.reserve(static_cast<size_t>(n_terms));
  double acc = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double damping = std::exp(-n * kPi * m2 / a);
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    const double term = prefactor * sign / (static_cast<double>(n) * n) * damping;
    series.underflowed.push_back(damping == 0.0);
    series.terms.push_back(term);
    acc += term;
    series.partial_sums.push_back(acc);
  }
  return series;
}

PoleCatalog pole_catalog(const FieldConfig& cfg, int count) {
  if (!(cfg.a() > 0.0)) {
    throw std::domain_error("pole_catalog: requires E > 0");
  }
  if (count < 1) {
    throw std::invalid_argument("pole_catalog: need count >= 1");
  }
  const double a = cfg.a();
  PoleCatalog catalog;
  catalog.integrand_poles.reserve(2 * static_cast<size_t>(count));
  catalog.resolvent_poles.reserve(2 * static_cast<size_t>(count));
  for (int n = 1; n <= count; ++n) {
    const double r = n * kPi / a;
    catalog.integrand_poles.emplace_back(0.0, -r);
    catalog.integrand_poles.emplace_back(0.0, r);
  }
  for (int n = 0; n < count; ++n) {
    const double r = a * (2.0 * n + 1.0);
    catalog.resolvent_poles.emplace_back(0.0, r);
    catalog.resolvent_poles.emplace_back(0.0, -r);
  }
  return catalog;
}

EffLagResult evaluate_efflag(const FieldConfig& cfg, const QuadratureSpec& spec,
                             EffLagMethod method, int n_terms) {
  EffLagResult result{};
  result.method = method;
  result.real_renormalized = efflag_real_renormalized(cfg, spec);
  if (method == EffLagMethod::ResidueSum) {
    if (cfg.a() == 0.0) {
      result.imag = 0.0;
      result.terms_used = 0;
    } else {
      const RateSeries series = pair_rate_residues(cfg, n_terms);
      result.imag = series.total();
      result.terms_used = n_terms;
    }
  } else {
    result.imag = efflag_imag_quadrature(cfg, spec);
    result.terms_used = 0;
  }
  return result;
}

}  // namespace spt
