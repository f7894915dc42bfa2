#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <string>

#include "mellin/errors.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrability/regularity index p and Mellin exponent c of a space X^p_c.
// Norm computations accept p in {1, 2, inf} only.
struct SpaceDescriptor {
  double p = 2.0;
  double c = 0.0;
};

// The v-density phi(v) of a signal on the line c + iv, evaluable everywhere.
// When `support` is set, the function vanishes identically for |v| > support
// (operator() enforces this regardless of the wrapped evaluator).
struct SpectralFunction {
  std::function<cxdbl(double)> eval;
  std::optional<double> support;
  bool l1 = false;
  bool l2 = false;
  bool linf = false;
  bool continuous = false;

  cxdbl operator()(double v) const {
    if (support && std::abs(v) > *support) return {0.0, 0.0};
    return eval(v);
  }
};

// An evaluable signal f on the positive half-line together with its Mellin
// exponent c. `weighted`, when provided, evaluates the log-axis profile
// g(t) = e^{ct} f(e^t) directly; every numerical routine works through it,
// which keeps magnitudes bounded where x^{-c} alone would overflow.
struct SignalFunction {
  double c = 0.0;
  std::function<cxdbl(double)> eval;
  std::function<cxdbl(double)> weighted;
  std::optional<SpectralFunction> spectrum;
  std::set<std::string> class_tags;

  cxdbl operator()(double x) const {
    if (!(x > 0.0)) throw std::domain_error("SignalFunction: x must be positive");
    return eval(x);
  }

  bool has_weighted() const { return static_cast<bool>(weighted); }

  // g(t) = e^{ct} f(e^t)
  cxdbl weighted_at(double t) const {
    if (weighted) return weighted(t);
    return std::exp(c * t) * eval(std::exp(t));
  }
};

enum class GridAxis { x_axis, log_axis };

// Geometric lattice x_k = e^{k/T}; uniform with step 1/T on the log axis.
struct LogUniformGrid {
  double T;
  long k_min;
  long k_max;
  GridAxis values_axis = GridAxis::log_axis;

  LogUniformGrid(double t, long kmin, long kmax, GridAxis axis = GridAxis::log_axis)
      : T(t), k_min(kmin), k_max(kmax), values_axis(axis) {
    if (!(T > 0.0)) throw std::domain_error("LogUniformGrid: T must be positive");
    if (!(k_min < k_max)) throw std::domain_error("LogUniformGrid: k_min < k_max required");
  }

  // Covers [t_lo, t_hi] with the given lattice density (nodes per unit t).
  static LogUniformGrid over(double t_lo, double t_hi, double nodes_per_unit) {
    const long kmin = static_cast<long>(std::floor(t_lo * nodes_per_unit));
    const long kmax = static_cast<long>(std::ceil(t_hi * nodes_per_unit));
    return LogUniformGrid(nodes_per_unit, kmin, kmax);
  }

  double log_node(long k) const { return static_cast<double>(k) / T; }
  double node(long k) const { return std::exp(log_node(k)); }
  double step() const { return 1.0 / T; }
  std::size_t size() const { return static_cast<std::size_t>(k_max - k_min + 1); }
};

struct BandLimit {
  double sigma;
  explicit BandLimit(double s) : sigma(s) {
    if (!(sigma > 0.0)) throw std::domain_error("BandLimit: sigma must be positive");
  }
};

// X^p_c norm of f approximated on the grid: composite trapezoid of
// |g(t)|^p on the log axis for p in {1, 2}, refined lattice supremum of
// |g(t)| for p = inf.
double xnorm(const SignalFunction& f, const SpaceDescriptor& space, const LogUniformGrid& grid);

// Mellin translation (tau_h^c f)(x) = h^c f(hx); a shift by log h on the
// weighted log axis. Carries the spectrum along (multiplier h^{-iv}).
SignalFunction translate(const SignalFunction& f, double h);

}  // namespace mellin
