#include "cli/commands.hpp"

#include <cmath>
#include <numbers>

#include "spt/field_config.hpp"
#include "spt/gamow.hpp"
#include "spt/propagators.hpp"
#include "spt/proper_time_kernel.hpp"
#include "spt/quadrature.hpp"
#include "spt/semiclassics.hpp"

namespace spt::cli {

namespace {

constexpr double kPropagatorTruncation = 400.0;  // proper-time cutoff T

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return out;
}

struct Grid {
  double lo, hi;
  int n;
};

Grid resolve_grid(const RunConfig& cfg, double lo, double hi, int n) {
  if (cfg.s_min) lo = *cfg.s_min;
  if (cfg.s_max) hi = *cfg.s_max;
  if (cfg.s_points) n = *cfg.s_points;
  if (!(hi >= lo)) {
    throw ConfigError("'s_max' must be >= 's_min'");
  }
  return {lo, hi, n};
}

QuadratureSpec quad_spec(const RunConfig& cfg) {
  QuadratureSpec spec;
  spec.rel_tol = cfg.rel_tol;
  spec.abs_tol = cfg.abs_tol;
  return spec;
}

OutputTable run_rate(const RunConfig& cfg) {
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const RateSeries series = pair_rate_residues(fc, cfg.terms);
  OutputTable table{{"n", "w_n", "partial_sum"}, {}};
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    table.rows.push_back({static_cast<double>(i + 1), series.terms[i],
                          series.partial_sums[i]});
  }
  return table;
}

OutputTable run_efflag(const RunConfig& cfg) {
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const QuadratureSpec spec = quad_spec(cfg);
  const double re = efflag_real_renormalized(fc, spec);
  const double im_residue = pair_rate_residues(fc, cfg.terms).total();
  const double im_quadrature = efflag_imag_quadrature(fc, spec);
  return {{"chi", "re_renorm", "im_residue", "im_quadrature", "agreement"},
          {{cfg.chi, re, im_residue, im_quadrature,
            std::abs(im_residue - im_quadrature)}}};
}

OutputTable run_kernel(const RunConfig& cfg) {
  const Grid grid = resolve_grid(cfg, 0.1, 2.0, 20);
  if (!(grid.lo > 0.0)) {
    throw ConfigError("kernel: proper-time grid must be positive");
  }
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const FieldConfig free_fc(fc.charge(), 0.0, fc.mass());
  const auto row = [&](double s) {
    const Complex k = kernel_diag(s, fc);
    const Complex f = kernel_diag(s, free_fc);
    return std::vector<double>{s, k.real(), k.imag(), f.real(), f.imag()};
  };
  return {{"s", "re", "im", "free_re", "free_im"},
          evaluate_rows(linspace(grid.lo, grid.hi, grid.n), row)};
}

OutputTable run_wkb(const RunConfig& cfg) {
  const Grid grid = resolve_grid(cfg, 0.0, 2.0, 5);
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const QuadratureSpec spec = quad_spec(cfg);
  const double closed = wkb_exponent_closed_form(fc);
  const double rate = sauter_rate(fc);
  const auto row = [&](double p0) {
    const TunnelingSetup setup{p0, fc};
    const TurningPoints tp = turning_points(setup);
    return std::vector<double>{p0,     tp.a,   tp.b,
                               wkb_exponent(setup, spec), closed, rate};
  };
  return {{"p0", "a", "b", "exponent", "closed_form", "rate"},
          evaluate_rows(linspace(grid.lo, grid.hi, grid.n), row)};
}

OutputTable run_trajectory(const RunConfig& cfg) {
  const double s_max = cfg.s_max.value_or(5.0);
  const double h = cfg.h.value_or(1e-3);
  if (!(s_max >= 0.0)) {
    throw ConfigError("trajectory: 's_max' must be >= 0");
  }
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const auto samples =
      integrate_trajectory(hyperbola_initial_state(fc), s_max, h, fc);
  OutputTable table{{"s", "t", "x3", "norm_drift"}, {}};
  table.rows.reserve(samples.size());
  for (const auto& [s, state] : samples) {
    table.rows.push_back(
        {s, state.x[0], state.x[3], std::abs(state.velocity_norm() - 1.0)});
  }
  return table;
}

OutputTable run_spectrum(const RunConfig& cfg) {
  const FieldConfig fc = FieldConfig::from_chi(cfg.chi, cfg.m);
  const QuadratureSpec spec = quad_spec(cfg);
  const double a = fc.a();
  // Gaussian decay on the ray starts past the classical turning point
  // sqrt(2n+1)/sqrt(a); pad generously.
  const double truncation =
      (std::sqrt(2.0 * cfg.n_max + 1.0) + 8.0) / std::sqrt(a);
  const RayContour contour{-std::numbers::pi / 4.0, truncation};

  std::vector<double> indices;
  for (int n = 0; n <= cfg.n_max; ++n) indices.push_back(n);
  const auto row = [&](double n_real) {
    const int n = static_cast<int>(n_real);
    const GamowMode ket{n, Branch::Decaying, a};
    const GamowMode bra{n, Branch::Growing, a};
    const Complex diag = bilinear_pairing(bra, ket, contour, spec);
    return std::vector<double>{n_real, gamow_eigenvalue(ket).imag(),
                               std::abs(diag - 1.0)};
  };
  return {{"n", "eigen_im", "pairing_diag_err"}, evaluate_rows(indices, row)};
}

OutputTable run_propagator(const RunConfig& cfg) {
  const Grid grid = resolve_grid(cfg, -2.0, 2.0, 9);
  const double eps = cfg.h.value_or(0.05);
  const double m2 = cfg.m * cfg.m;
  const QuadratureSpec spec = quad_spec(cfg);
  const auto row = [&](double delta) {
    const MomentumPoint p = momentum_with_p_squared(delta + m2);
    const Complex closed =
        onshell_green_momentum(p, m2, BoundaryCondition::Feynman, eps);
    const TransformResult pt = onshell_from_proper_time(
        p, m2, BoundaryCondition::Feynman, eps, kPropagatorTruncation, spec);
    return std::vector<double>{delta, closed.real(), closed.imag(),
                               pt.value.real(), pt.value.imag()};
  };
  return {{"p2_minus_m2", "re_closed", "im_closed", "re_pt", "im_pt"},
          evaluate_rows(linspace(grid.lo, grid.hi, grid.n), row)};
}

}  // namespace

std::vector<std::vector<double>> evaluate_rows(
    const std::vector<double>& points, const RowFn& fn,
    const std::vector<std::size_t>* order) {
  std::vector<std::vector<double>> rows(points.size());
  if (order == nullptr) {
    for (std::size_t i = 0; i < points.size(); ++i) rows[i] = fn(points[i]);
    return rows;
  }
  for (std::size_t i : *order) {
    rows.at(i) = fn(points.at(i));
  }
  return rows;
}

OutputTable run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Rate:
      return run_rate(cfg);
    case Command::Efflag:
      return run_efflag(cfg);
    case Command::Kernel:
      return run_kernel(cfg);
    case Command::Wkb:
      return run_wkb(cfg);
    case Command::Trajectory:
      return run_trajectory(cfg);
    case Command::Spectrum:
      return run_spectrum(cfg);
    case Command::Propagator:
      return run_propagator(cfg);
  }
  throw ConfigError("unreachable command");
}

}  // namespace spt::cli
