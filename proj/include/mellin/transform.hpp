#pragma once

#include <vector>

#include "mellin/core.hpp"

namespace mellin {

// Spectrum sampled on a uniform v grid: values[i] ~ [f]^_{M_c}(c + i v_grid[i]).
struct SpectralSamples {
  std::vector<double> v_grid;
  std::vector<cxdbl> values;
  double c = 0.0;

  void validate() const;
  double v_step() const { return v_grid.size() > 1 ? v_grid[1] - v_grid[0] : 0.0; }
};

// Windows and steps for the log-axis quadratures. Defaults exceed the
// accuracy needs of every rapidly decaying catalog entry; slowly decaying
// signals need wider windows and a looser decay floor, passed per call.
struct TransformConfig {
  double t_lo = -40.0;
  double t_hi = 40.0;
  double t_step = 1.0 / 64.0;
  double v_lo = -40.0;
  double v_hi = 40.0;
  double v_step = 1.0 / 128.0;
  double decay_floor = 1e-14;  // relative to the window peak
};

// Forward transform at s = c + iv for each v in v_grid: composite trapezoid
// of e^{ivt} g(t) over [t_lo, t_hi], where g is the weighted signal.
// Throws WindowTooSmallError when |g| at the window ends exceeds
// decay_floor times the window peak.
SpectralSamples mellin_forward(const SignalFunction& f, const std::vector<double>& v_grid,
                               double t_lo, double t_hi, double t_step,
                               double decay_floor = 1e-14);
SpectralSamples mellin_forward(const SignalFunction& f, const TransformConfig& cfg);

// Inverse transform (x^{-c}/2pi) Int phi(v) x^{-iv} dv at each requested x.
// With support metadata the window is clipped to the support; otherwise the
// tails at the window ends are checked against the decay floor.
std::vector<cxdbl> mellin_inverse(const SpectralFunction& phi, double c,
                                  const std::vector<double>& x_points, double v_lo,
                                  double v_hi, double v_step, double decay_floor = 1e-14);
std::vector<cxdbl> mellin_inverse(const SpectralSamples& samples,
                                  const std::vector<double>& x_points);

// Weighted inverse: g(t) = (1/2pi) Int phi(v) e^{-ivt} dv, no x^{-c} factor.
// This is the numerically safe form for large |t|.
std::vector<cxdbl> mellin_inverse_weighted(const SpectralFunction& phi,
                                           const std::vector<double>& t_points, double v_lo,
                                           double v_hi, double v_step,
                                           double decay_floor = 1e-14);
cxdbl mellin_inverse_weighted_at(const SpectralFunction& phi, double t, double v_lo,
                                 double v_hi, double v_step);

// Sup over a probe lattice of |g(t) - g_roundtrip(t)| where g_roundtrip is
// the inverse of the forward transform of f. Validates the inversion pair.
double roundtrip_error(const SignalFunction& f, const TransformConfig& cfg);

}  // namespace mellin
