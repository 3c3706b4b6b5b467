#pragma once

#include <vector>

#include "spt/complex_value.hpp"
#include "spt/field_config.hpp"
#include "spt/quadrature.hpp"

namespace spt {

enum class EffLagMethod { ResidueSum, ContourQuadrature };

// One-loop effective Lagrangian density for the constant field.
//   real_renormalized: Re L after vacuum and charge subtraction.
//   imag: pair-creation probability density w per unit four-volume; the
//         vacuum persistence probability is exp(-w V T), i.e. w = 2 Im L.
struct EffLagResult {
  double real_renormalized;
  double imag;
  EffLagMethod method;
  int terms_used;
};

// Alternating residue series w_n with partial sums. Terms whose exponent
// underflows are reported as exact zeros and flagged.
struct RateSeries {
  std::vector<double> terms;
  std::vector<double> partial_sums;
  std::vector<bool> underflowed;

  double total() const {
    return partial_sums.empty() ? 0.0 : partial_sums.back();
  }
};

// Poles relevant to the proper-time integrand and to the resolvent:
//   integrand: 1/sinh(a z) has z = +-i n pi / a, n >= 1;
//   resolvent: +-i a (2n+1), n >= 0 (the Gamow eigenvalues).
// Both lists are ordered by modulus; within a tie the integrand list puts
// the lower-half-plane pole first (the one a downward deformation meets),
// the resolvent list the decaying-branch pole first.
struct PoleCatalog {
  std::vector<Complex> integrand_poles;
  std::vector<Complex> resolvent_poles;
};

// Coincidence-point kernel of the proper-time evolution,
//   -i/(4 pi s)^2 * (as)/sinh(as),
// reducing to the free value -i/(4 pi s)^2 when E = 0.
Complex kernel_diag(double s, const FieldConfig& cfg);

// x/sinh(x) - 1 + x^2/6 with a series branch guarding the small-|x|
// cancellation and an exp form guarding large Re x.
Complex subtracted_sinh_kernel(Complex x);

// Weak-field quartic term of the renormalized Lagrangian:
//   7/(5760 pi^2) * m^4 * chi^4.
double heisenberg_euler_quartic(const FieldConfig& cfg);

// Re L from ray quadrature of
//   -(1/16 pi^2) int_0^inf ds/s^3 [as/sinh(as) - 1 + (as)^2/6] e^{-i m^2 s}
// along s = e^{i theta} t. Both subtractions (vacuum, charge) leave the
// imaginary part untouched; theta defaults to -pi/4.
double efflag_real_renormalized(const FieldConfig& cfg,
                                const QuadratureSpec& spec,
                                double ray_angle = -0.78539816339744830962);

// Pair-creation density w = 2 Im L from the same ray integral. Agrees
// with the converged residue series; admissible angles lie strictly
// between the real axis and the pole string on the negative imaginary
// axis. Throws PoleProximityError when the ray comes closer than
// min_pole_angle (radians) to the pole direction.
double efflag_imag_quadrature(const FieldConfig& cfg,
                              const QuadratureSpec& spec,
                              double ray_angle = -0.78539816339744830962,
                              double min_pole_angle = 0.05);

// w_n = (eE)^2/(8 pi^3) * (-1)^{n+1}/n^2 * exp(-n pi m^2 / eE) for
// n = 1..n_terms, from the residues at z_{-n} = -i n pi / eE.
RateSeries pair_rate_residues(const FieldConfig& cfg, int n_terms);

PoleCatalog pole_catalog(const FieldConfig& cfg, int count);

// Convenience: assemble an EffLagResult via the chosen route.
EffLagResult evaluate_efflag(const FieldConfig& cfg, const QuadratureSpec& spec,
                             EffLagMethod method, int n_terms = 5);

}  // namespace spt
