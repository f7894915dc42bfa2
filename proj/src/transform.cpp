#include "mellin/transform.hpp"

#include <algorithm>
#include <cmath>

namespace mellin {

namespace {

struct WeightedTable {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<cxdbl> values;
};

WeightedTable tabulate_weighted(const SignalFunction& f, double t_lo, double t_hi,
                                double t_step, double decay_floor) {
  if (!(t_hi > t_lo) || !(t_step > 0.0)) {
    throw std::invalid_argument("mellin_forward: bad window");
  }
  const std::size_t panels = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / t_step));
  WeightedTable tab;
  tab.t0 = t_lo;
  tab.h = (t_hi - t_lo) / static_cast<double>(panels);
  tab.values.resize(panels + 1);
  double peak = 0.0;
  for (std::size_t j = 0; j <= panels; ++j) {
    const double t = t_lo + static_cast<double>(j) * tab.h;
    const cxdbl v = f.weighted_at(t);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("mellin_forward: non-finite integrand at t = " + std::to_string(t));
    }
    tab.values[j] = v;
    peak = std::max(peak, std::abs(v));
  }
  // Check the outermost nodes, not just the endpoints: an isolated exact
  // zero (a sinc node) must not masquerade as decay.
  double edge = 0.0;
  const std::size_t probe = std::min<std::size_t>(8, tab.values.size());
  for (std::size_t j = 0; j < probe; ++j) {
    edge = std::max({edge, std::abs(tab.values[j]), std::abs(tab.values[tab.values.size() - 1 - j])});
  }
  if (peak > 0.0 && edge > decay_floor * peak) {
    throw WindowTooSmallError("mellin_forward: signal has not decayed below the floor at the window ends");
  }
  return tab;
}

}  // namespace

void SpectralSamples::validate() const {
  if (v_grid.size() != values.size()) {
    throw std::invalid_argument("SpectralSamples: grid/value length mismatch");
  }
  if (v_grid.size() < 2) throw std::invalid_argument("SpectralSamples: need at least two nodes");
  const double h = v_grid[1] - v_grid[0];
  if (!(h > 0.0)) throw std::invalid_argument("SpectralSamples: grid must increase");
  for (std::size_t i = 1; i < v_grid.size(); ++i) {
    const double d = v_grid[i] - v_grid[i - 1];
    if (std::abs(d - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw std::invalid_argument("SpectralSamples: grid must be uniform");
    }
  }
}

SpectralSamples mellin_forward(const SignalFunction& f, const std::vector<double>& v_grid,
                               double t_lo, double t_hi, double t_step, double decay_floor) {
  const WeightedTable tab = tabulate_weighted(f, t_lo, t_hi, t_step, decay_floor);
  SpectralSamples out;
  out.c = f.c;
  out.v_grid = v_grid;
  out.values.resize(v_grid.size());
  for (std::size_t i = 0; i < v_grid.size(); ++i) {
    out.values[i] = quad::oscillatory_trapezoid(tab.values, tab.t0, tab.h, v_grid[i]);
  }
  return out;
}

SpectralSamples mellin_forward(const SignalFunction& f, const TransformConfig& cfg) {
  std::vector<double> v_grid;
  const std::size_t n = static_cast<std::size_t>(std::round((cfg.v_hi - cfg.v_lo) / cfg.v_step));
  v_grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    v_grid.push_back(cfg.v_lo + static_cast<double>(i) * cfg.v_step);
  }
  return mellin_forward(f, v_grid, cfg.t_lo, cfg.t_hi, cfg.t_step, cfg.decay_floor);
}

std::vector<cxdbl> mellin_inverse_weighted(const SpectralFunction& phi,
                                           const std::vector<double>& t_points, double v_lo,
                                           double v_hi, double v_step, double decay_floor) {
  if (phi.support) {
    v_lo = std::max(v_lo, -*phi.support);
    v_hi = std::min(v_hi, *phi.support);
  }
  if (!(v_hi > v_lo)) {
    return std::vector<cxdbl>(t_points.size(), cxdbl{0.0, 0.0});
  }
  const std::size_t panels = static_cast<std::size_t>(std::ceil((v_hi - v_lo) / v_step));
  const double h = (v_hi - v_lo) / static_cast<double>(panels);
  std::vector<cxdbl> vals(panels + 1);
  double peak = 0.0;
  for (std::size_t j = 0; j <= panels; ++j) {
    vals[j] = phi(v_lo + static_cast<double>(j) * h);
    peak = std::max(peak, std::abs(vals[j]));
  }
  if (!phi.support) {
    const double edge = std::max(std::abs(vals.front()), std::abs(vals.back()));
    if (peak > 0.0 && edge > decay_floor * peak) {
      throw WindowTooSmallError("mellin_inverse: spectral tail mass above the floor and no support metadata");
    }
  }
  std::vector<cxdbl> out(t_points.size());
  for (std::size_t i = 0; i < t_points.size(); ++i) {
    out[i] = quad::oscillatory_trapezoid(vals, v_lo, h, -t_points[i]) / (2.0 * kPi);
  }
  return out;
}

cxdbl mellin_inverse_weighted_at(const SpectralFunction& phi, double t, double v_lo,
                                 double v_hi, double v_step) {
  return mellin_inverse_weighted(phi, {t}, v_lo, v_hi, v_step)[0];
}

std::vector<cxdbl> mellin_inverse(const SpectralFunction& phi, double c,
                                  const std::vector<double>& x_points, double v_lo,
                                  double v_hi, double v_step, double decay_floor) {
  std::vector<double> t_points(x_points.size());
  for (std::size_t i = 0; i < x_points.size(); ++i) {
    if (!(x_points[i] > 0.0)) throw std::domain_error("mellin_inverse: x must be positive");
    t_points[i] = std::log(x_points[i]);
  }
  std::vector<cxdbl> g = mellin_inverse_weighted(phi, t_points, v_lo, v_hi, v_step, decay_floor);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] *= std::pow(x_points[i], -c);
  }
  return g;
}

std::vector<cxdbl> mellin_inverse(const SpectralSamples& samples,
                                  const std::vector<double>& x_points) {
  samples.validate();
  const double h = samples.v_step();
  std::vector<cxdbl> out(x_points.size());
  for (std::size_t i = 0; i < x_points.size(); ++i) {
    if (!(x_points[i] > 0.0)) throw std::domain_error("mellin_inverse: x must be positive");
    const double t = std::log(x_points[i]);
    const cxdbl g = quad::oscillatory_trapezoid(samples.values, samples.v_grid.front(), h, -t) /
                    (2.0 * kPi);
    out[i] = std::pow(x_points[i], -samples.c) * g;
  }
  return out;
}

double roundtrip_error(const SignalFunction& f, const TransformConfig& cfg) {
  TransformConfig eff = cfg;
  if (f.spectrum && f.spectrum->support) {
    eff.v_lo = -*f.spectrum->support;
    eff.v_hi = *f.spectrum->support;
  }
  const SpectralSamples fwd = mellin_forward(f, eff);

  std::vector<double> t_probes;
  for (int i = -6; i <= 6; ++i) t_probes.push_back(0.5 * i);

  const double h = fwd.v_step();
  double err = 0.0;
  for (double t : t_probes) {
    const cxdbl g_rec =
        quad::oscillatory_trapezoid(fwd.values, fwd.v_grid.front(), h, -t) / (2.0 * kPi);
    err = std::max(err, std::abs(f.weighted_at(t) - g_rec));
  }
  return err;
}

}  // namespace mellin
