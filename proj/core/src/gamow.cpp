#include "spt/gamow.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spt {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const GamowMode& mode) {
  if (mode.n < 0) {
    throw std::invalid_argument("GamowMode: n must be >= 0");
  }
  if (mode.n > kHermiteStabilityBound) {
    std::ostringstream msg;
    msg << "GamowMode: n = " << mode.n << " beyond the stability bound "
        << kHermiteStabilityBound;
    throw NumericOverflowError(msg.str());
  }
  if (!(mode.a > 0.0) || !std::isfinite(mode.a)) {
    throw std::invalid_argument("GamowMode: a must be positive");
  }
}

// q_n = H_n(xi)/sqrt(2^n n!) * gauss, built by the normalized recurrence
// seeded with the Gaussian so intermediates stay bounded on the pairing
// contour (where |gauss| offsets the Hermite growth).
Complex seeded_hermite(int n, Complex xi, Complex gauss) {
  Complex qm{0.0, 0.0};
  Complex q = gauss;
  for (int k = 0; k < n; ++k) {
    Complex qp = xi * std::sqrt(2.0 / (k + 1)) * q -
                 std::sqrt(static_cast<double>(k) / (k + 1)) * qm;
    qm = q;
    q = qp;
  }
  return q;
}

Complex wavefunction_impl(const GamowMode& mode, Complex u) {
  validate(mode);
  const double root_a = std::sqrt(mode.a);
  const double quarter_norm = std::pow(mode.a / kPi, 0.25);
  if (mode.branch == Branch::Decaying) {
    // (ia/pi)^{1/4} = (a/pi)^{1/4} e^{i pi/8}, principal branch.
    const Complex norm = quarter_norm * std::polar(1.0, kPi / 8.0);
    const Complex xi = root_a * std::polar(1.0, kPi / 4.0) * u;
    const Complex gauss = std::exp(Complex(0.0, -0.5 * mode.a) * u * u);
    return norm * seeded_hermite(mode.n, xi, gauss);
  }
  const Complex norm = quarter_norm * std::polar(1.0, -kPi / 8.0);
  const Complex xi = root_a * std::polar(1.0, -kPi / 4.0) * u;
  const Complex gauss = std::exp(Complex(0.0, 0.5 * mode.a) * u * u);
  return norm * seeded_hermite(mode.n, xi, gauss);
}

}  // namespace

Complex gamow_eigenvalue(const GamowMode& mode) {
  validate(mode);
  const double magnitude = mode.a * (2.0 * mode.n + 1.0);
  return mode.branch == Branch::Decaying ? Complex(0.0, magnitude)
                                         : Complex(0.0, -magnitude);
}

Complex gamow_wavefunction(const GamowMode& mode, double u) {
  return wavefunction_impl(mode, Complex(u, 0.0));
}

Complex gamow_wavefunction(const GamowMode& mode, Complex u) {
  return wavefunction_impl(mode, u);
}

Complex bilinear_pairing(const GamowMode& bra, const GamowMode& ket,
                         const RayContour& contour,
                         const QuadratureSpec& spec) {
  validate(bra);
  validate(ket);
  if (bra.branch != Branch::Growing || ket.branch != Branch::Decaying) {
    throw std::domain_error(
        "bilinear_pairing: expects a growing bra against a decaying ket");
  }
  if (bra.a != ket.a) {
    throw std::domain_error("bilinear_pairing: bra and ket need the same a");
  }
  if (!(std::sin(2.0 * contour.angle) < 0.0)) {
    throw std::domain_error(
        "bilinear_pairing: contour angle outside the decay sector "
        "(need sin(2 theta) < 0)");
  }

  // The growing bra enters bilinearly: its conjugate-reflection
  // continuation conj(phi~_n(conj(u))) equals the decaying-form function
  // at u, so the integrand is phi_n(u) phi_m(u) along the ray.
  const GamowMode bra_as_decaying{bra.n, Branch::Decaying, bra.a};
  const Complex phase = std::polar(1.0, contour.angle);
  auto integrand = [&](double t) {
    const Complex u = phase * t;
    return gamow_wavefunction(bra_as_decaying, u) *
           gamow_wavefunction(ket, u) * phase;
  };
  return adaptive_quad(integrand, -contour.truncation, contour.truncation,
                       spec)
      .value;
}

Complex evolve(const GamowMode& mode, double s) {
  validate(mode);
  if (!std::isfinite(s)) {
    throw std::domain_error("evolve: s must be finite");
  }
  const double rate = mode.a * (2.0 * mode.n + 1.0);
  if (mode.branch == Branch::Decaying) {
    if (s < 0.0) {
      throw std::domain_error(
          "evolve: decaying modes form a semigroup for s >= 0 only");
    }
    return Complex(std::exp(-rate * s), 0.0);
  }
  if (s > 0.0) {
    throw std::domain_error(
        "evolve: growing modes form a semigroup for s <= 0 only");
  }
  return Complex(std::exp(rate * s), 0.0);
}

GamowMode wigner_conjugate(const GamowMode& mode) {
  validate(mode);
  return {mode.n,
          mode.branch == Branch::Decaying ? Branch::Growing : Branch::Decaying,
          mode.a};
}

Complex mehler_kernel(Complex u, Complex uprime, double s, double a) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("mehler_kernel: s must be positive");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::domain_error("mehler_kernel: a must be positive");
  }
  const double sh2 = std::sinh(2.0 * a * s);
  const double ch2 = std::cosh(2.0 * a * s);
  if (!std::isfinite(sh2)) {
    throw NumericOverflowError("mehler_kernel: sinh(2as) overflow");
  }
  // sqrt(ia/(2 pi sinh(2as))) on the principal branch: the argument sits
  // on the positive imaginary axis, so the root carries e^{i pi/4}.
  const Complex prefactor =
      std::sqrt(a / (2.0 * kPi * sh2)) * std::polar(1.0, kPi / 4.0);
  const Complex quad = (u * u + uprime * uprime) * ch2 - 2.0 * u * uprime;
  const Complex exponent = Complex(0.0, -a / (2.0 * sh2)) * quad;
  Complex value = prefactor * std::exp(exponent);
  require_finite(value, "mehler_kernel");
  return value;
}

Complex mehler_kernel(double u, double uprime, double s, double a) {
  return mehler_kernel(Complex(u, 0.0), Complex(uprime, 0.0), s, a);
}

Complex spectral_kernel_sum(double u, double uprime, double s, double a,
                            const SpectralTruncation& trunc) {
  if (trunc.n_max < -1) {
    throw std::invalid_argument(
        "SpectralTruncation: n_max must be >= -1 (-1 = empty sum)");
  }
  if (!(s > 0.0) || !(a > 0.0)) {
    throw std::domain_error("spectral_kernel_sum: need s > 0 and a > 0");
  }
  Complex acc{0.0, 0.0};
  for (int n = 0; n <= trunc.n_max; ++n) {
    const GamowMode mode{n, Branch::Decaying, a};
    const double weight = std::exp(-a * (2.0 * n + 1.0) * s);
    // Dual weight in the bilinear convention: on the real axis the
    // growing partner contributes through phi_n itself.
    acc += weight * gamow_wavefunction(mode, u) *
           gamow_wavefunction(mode, uprime);
  }
  require_finite(acc, "spectral_kernel_sum");
  return acc;
}

double spectral_trace(double s, double a) {
  if (!(s > 0.0) || !(a > 0.0)) {
    throw std::domain_error("spectral_trace: need s > 0 and a > 0");
  }
  const double sh = std::sinh(a * s);
  return std::isfinite(sh) ? 1.0 / (2.0 * sh) : 0.0;
}

double spectral_trace_truncated(double s, double a, int n_max) {
  if (!(s > 0.0) || !(a > 0.0)) {
    throw std::domain_error("spectral_trace_truncated: need s > 0 and a > 0");
  }
  double acc = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    acc += std::exp(-a * (2.0 * n + 1.0) * s);
  }
  return acc;
}

}  // namespace spt
