#pragma once

#include "spt/complex_value.hpp"
#include "spt/quadrature.hpp"

namespace spt {

// Resonance eigenfunctions of the inverted oscillator H = p^2 - a^2 u^2.
// The decaying branch carries eigenvalue +i*a*(2n+1) and damps as
// exp(-a(2n+1)s) under the proper-time semigroup (s >= 0); the growing
// branch is its pointwise complex conjugate on the real axis and is
// admissible for s <= 0.
enum class Branch { Decaying, Growing };

// Largest mode index with a vetted stable Hermite recurrence on the
// contours used here; higher n risks overflow in intermediate values.
inline constexpr int kHermiteStabilityBound = 60;

struct GamowMode {
  int n;          // 0 <= n <= kHermiteStabilityBound
  Branch branch;
  double a;       // eE > 0, units mass^2
};

// Affine frame that splits off the momentum p0 along x^0 and centers the
// oscillator coordinate: u = x^3 + p0/a.
struct LadderFrame {
  double a;
  double p0;

  double shifted_coordinate(double x3) const { return x3 + p0 / a; }
  double x3_from_shifted(double u) const { return u - p0 / a; }
  Complex plane_wave(double x0) const {
    return std::polar(1.0, p0 * x0);
  }
};

// Truncation for spectral sums; n_max = -1 denotes the empty sum.
struct SpectralTruncation {
  int n_max;
};

// lambda_n = +i a (2n+1) on the decaying branch, -i a (2n+1) on the
// growing branch. Purely imaginary.
Complex gamow_eigenvalue(const GamowMode& mode);

// Wavefunction at real coordinate u:
//   decaying:  (ia/pi)^{1/4} H_n(sqrt(ia) u)/sqrt(2^n n!) e^{-i a u^2/2}
//   growing:   complex conjugate of the decaying one.
// Throws NumericOverflowError for n beyond kHermiteStabilityBound.
Complex gamow_wavefunction(const GamowMode& mode, double u);

// Analytic continuation of the wavefunction to complex u (the growing
// branch continues its conjugate-on-the-real-axis form).
Complex gamow_wavefunction(const GamowMode& mode, Complex u);

// Regularized pairing <growing bra | decaying ket>. The Gaussian factors
// cancel on the real axis, so the bilinear integrand is evaluated on the
// rotated ray u = e^{i theta} t, t in [-T, T], where decay is restored
// (theta must satisfy sin(2 theta) < 0; -pi/4 is the natural choice).
// Equals delta_{nm} for matching a.
Complex bilinear_pairing(const GamowMode& bra, const GamowMode& ket,
                         const RayContour& contour,
                         const QuadratureSpec& spec);

// Semigroup amplitude exp(-a(2n+1)s) for the decaying branch (s >= 0) and
// exp(+a(2n+1)s) for the growing branch (s <= 0). Throws
// std::domain_error outside the admissible half-line.
Complex evolve(const GamowMode& mode, double s);

// Branch flip at fixed n and a (time-reversal conjugation).
GamowMode wigner_conjugate(const GamowMode& mode);

// Closed-form evolution kernel of the inverted oscillator,
//   K(u,u';s) = sqrt(ia/(2 pi sinh(2as)))
//               * exp(-ia[(u^2+u'^2) cosh(2as) - 2uu'] / (2 sinh(2as))),
// principal branch. The phase convention is fixed by the s -> 0 free
// limit e^{i pi/4}/sqrt(4 pi s) and by trace consistency with
// spectral_trace; both are pinned in tests.
Complex mehler_kernel(double u, double uprime, double s, double a);

// Continuation of the kernel to complex coordinates (used for rotated
// trace and composition quadrature).
Complex mehler_kernel(Complex u, Complex uprime, double s, double a);

// Truncated spectral form of the kernel,
//   sum_{n=0}^{n_max} e^{-a(2n+1)s} phi_n(u) phi~_n(u'),
// with the dual weight phi~_n entering through the bilinear pairing
// convention (on the real axis it coincides with phi_n). Converges to
// mehler_kernel with ratio e^{-2as} per mode.
Complex spectral_kernel_sum(double u, double uprime, double s, double a,
                            const SpectralTruncation& trunc);

// sum_n e^{-a(2n+1)s} = 1/(2 sinh(as)) for s > 0.
double spectral_trace(double s, double a);

// Partial sum of the trace through n_max (geometric tail test hook).
double spectral_trace_truncated(double s, double a, int n_max);

}  // namespace spt
