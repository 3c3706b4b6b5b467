#pragma once

#include <array>

#include "spt/complex_value.hpp"
#include "spt/field_config.hpp"
#include "spt/gamow.hpp"
#include "spt/quadrature.hpp"

namespace spt {

using FourVector = std::array<double, 4>;

// Contravariant momentum, metric signature (+,-,-,-).
struct MomentumPoint {
  FourVector p{};

  double p_squared() const {
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
  }
};

// Representative momentum with the requested invariant: rest frame for
// p2 >= 0, purely spatial otherwise.
MomentumPoint momentum_with_p_squared(double p2);

// The two boundary values of the resolvent at the mass shell. Feynman
// approaches from above the cut (+i eps), Dyson from below.
enum class BoundaryCondition { Feynman, Dyson };

// One evaluation of the external-field kernel between two spacetime
// points at proper time s.
struct OffshellKernelSample {
  FourVector x{};
  FourVector y{};
  double s = 0.0;
  Complex value{};
};

// 1/(p^2 - z). Throws PoleHitError when |p^2 - z| < pole_floor.
Complex free_resolvent(const MomentumPoint& p, Complex z,
                       double pole_floor = 1e-12);

// Closed form 1/(p^2 - m^2 + i eps) (Feynman) or 1/(p^2 - m^2 - i eps)
// (Dyson); eps > 0.
Complex onshell_green_momentum(const MomentumPoint& p, double m_squared,
                               BoundaryCondition bc, double epsilon);

struct TransformResult {
  Complex value;
  double tail_bound;        // e^{-eps T}/eps bound on the discarded tail
  bool truncation_warning;  // tail bound above spec.abs_tol
};

// Proper-time representation of the on-shell Green function,
//   Feynman: -i int_0^T e^{is(p^2 - m^2 + i eps)} ds,
//   Dyson:   +i int_{-T}^0 e^{is(p^2 - m^2 - i eps)} ds,
// approaching onshell_green_momentum as e^{-eps T} -> 0.
TransformResult onshell_from_proper_time(const MomentumPoint& p,
                                         double m_squared,
                                         BoundaryCondition bc, double epsilon,
                                         double T,
                                         const QuadratureSpec& spec = {});

// Kernel of exp(-i p^2 s) in one dimension,
//   (1/2pi) sqrt(pi/(is)) e^{i delta^2/(4s)},
// the pinned phase for the transverse factors below. Requires s > 0.
Complex free_kernel_1d(double delta, double s);

// (x^0, x^3) factor of the external-field kernel: the plane-wave p0
// integral over oscillator kernels in the shifted coordinate, reduced in
// closed form to
//   a/(4 pi sinh(as)) * exp(-i(a/2)(x3+y3)(x0-y0))
//                     * exp(-i(a/4) coth(as) [(x3-y3)^2 - (x0-y0)^2]).
// a -> 0 recovers the free form (1/4pi s) e^{-i[(x3-y3)^2-(x0-y0)^2]/(4s)}.
// Requires s > 0.
Complex oscillator_sector_kernel(double x0, double x3, double y0, double y3,
                                 double s, const FieldConfig& cfg);

// Retarded kernel theta(s) * F(dx1;s) F(dx2;s) * sector(x0,x3;y0,y3;s).
// Returns exactly 0 for s <= 0. At x = y equals the renormalization-free
// diagonal -i/(4 pi s)^2 * as/sinh(as).
Complex offshell_retarded_kernel(const FourVector& x, const FourVector& y,
                                 double s, const FieldConfig& cfg);

// Advanced branch: same code path with s -> -s and conjugation. Exactly 0
// for s >= 0.
Complex offshell_advanced_kernel(const FourVector& x, const FourVector& y,
                                 double s, const FieldConfig& cfg);

OffshellKernelSample sample_offshell_kernel(const FourVector& x,
                                            const FourVector& y, double s,
                                            const FieldConfig& cfg);

// |spectral_kernel_sum - mehler_kernel| / |mehler_kernel| for the
// oscillator factor: how well the truncated resonance expansion rebuilds
// the closed-form kernel on the retarded branch. Requires s > 0.
double gamow_reconstruction_check(double u, double u_prime, double s,
                                  const FieldConfig& cfg,
                                  const SpectralTruncation& trunc);

}  // namespace spt
