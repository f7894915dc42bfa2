#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/transform.hpp"

namespace mellin {

// Tail query: distance of Theta^k_c f (k = 0: f itself) from the Bernstein
// space band-limited to [-sigma, sigma], measured in the L^q spectral metric.
struct DistanceQuery {
  double sigma;
  double q;
  int k = 0;
};

enum class BoundSource { lipschitz_X1, lipschitz_X2, sobolev_X1, sobolev_X2 };

struct BoundReport {
  double bound_value = 0.0;
  double constant_D = 0.0;
  BoundSource source = BoundSource::sobolev_X1;
  std::map<std::string, double> parameters;
  bool divergent = false;  // right-hand side does not converge
};

// dist_q of Theta^k_c f from B^p_{c,sigma}: the L^q mass of |v^k phi(v)|
// over |v| >= sigma (q < inf), or its refined supremum (q = inf, requires a
// continuous spectrum). Requires the L1 integrability tag on phi.
double dist_q(const SpectralFunction& phi, const DistanceQuery& query);

// Same tail integral on a sampled spectrum (trapezoid on the sample lattice,
// sigma snapped outward to the nearest node). q = inf is rejected here.
double dist_q(const SpectralSamples& samples, const DistanceQuery& query);

// Returns (L2 distance of the spectra, sqrt(2 pi) * X^2_c distance of the
// signals); the two must agree for members of the inversion class.
std::pair<double, double> dist2_euclidean_check(const SignalFunction& f, const SignalFunction& g,
                                                const LogUniformGrid& grid,
                                                const TransformConfig& cfg = {});

struct LipschitzOptions {
  int probe_count = 33;        // modulus probe points per evaluation
  double v_max_factor = 16.0;  // numeric integration up to max(factor*sigma, v_max_min)
  double v_max_min = 128.0;
  std::optional<LogUniformGrid> grid;  // norm grid override
};

// Right-hand sides of the modulus-of-smoothness distance bounds.
// space_p = 1: D = ((1+pi)/2)^r and the tail integral of omega_r(f, 1/v)^q;
// space_p = 2: D = sqrt(2) pi^r and the integrand |v^{-1/2} omega_r(f, 1/v)|^q.
// The integral beyond the numeric window is extrapolated with the
// omega ~ delta^r decay model; a non-converging combination (r q <= 1) is
// returned flagged divergent instead of a number.
BoundReport lipschitz_bound(const SignalFunction& f, int r, double sigma, double q, int space_p,
                            const LipschitzOptions& opts = {});

// Closed-form Sobolev bounds D * |Theta^r_c f| * sigma^{-exponent}.
// space_p = 1, shift 0:  D = (2/(rq-1))^{1/q}, exponent r - 1/q   (q = inf: D = 1, exponent r)
// space_p = 1, shift 1:  D = (2/(rq-q-1))^{1/q}, exponent r - 1 - 1/q  (q = inf: D = 1)
// space_p = 2, shift 0:  q in [1,2): D = sqrt(2 pi) ((4-2q)/((2r+1)q-2))^{1/q-1/2},
//                        exponent r + 1/2 - 1/q; q = 2: D = (2 pi)^{-1/2}, exponent r.
// space_p = 2, shift 1:  same family with r replaced by r-1 in the constant.
BoundReport sobolev_bound(double theta_r_norm, int r, double sigma, double q, int space_p,
                          int derivative_shift = 0);

// Ordinary least-squares slope of log(dist) against log(sigma).
double rate_fit(const std::vector<std::pair<double, double>>& points);

struct BernsteinCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// Extended Bernstein inequality:
//   |Theta_c f|_{X^2_c} <= pi T |f|_{X^2_c} + (2 pi)^{-1/2} dist_2(Theta_c f, B^2_{c,pi T}).
// The left side comes from the spectral L2 norm of v phi(v), the right side
// from the grid X^2 norm of f plus the tail distance, so the two routes are
// independent.
BernsteinCheck bernstein_extended_check(const SignalFunction& f, double T,
                                        const LogUniformGrid& grid, const TransformConfig& cfg = {});

namespace detail {

// Two-sided tail integral of fn over |v| >= sigma for a spectrum with the
// given support (integration stops there) or, without support, via the
// substitution v = sigma/u that maps each tail onto (0, 1].
double tail_integral(const std::function<double(double)>& fn, double sigma,
                     std::optional<double> support);

// Complex-valued version used by remainder integrals; optional alignment
// breakpoints force cell boundaries (kinks of the sawtooth multiplier).
// Without support the window is expanded geometrically until the integrand
// magnitude falls below floor * peak.
cxdbl tail_integral_cx(const std::function<cxdbl(double)>& fn, double sigma,
                       std::optional<double> support, double align_origin,
                       double align_spacing, double decay_floor = 1e-14);

// Refined supremum of fn over |v| >= sigma.
double tail_sup(const std::function<double(double)>& fn, double sigma,
                std::optional<double> support);

}  // namespace detail

}  // namespace mellin
