#include "mellin/core.hpp"

#include <cmath>
#include <vector>

namespace mellin {

namespace {

bool is_supported_p(double p) { return p == 1.0 || p == 2.0 || std::isinf(p); }

}  // namespace

double xnorm(const SignalFunction& f, const SpaceDescriptor& space, const LogUniformGrid& grid) {
  if (!is_supported_p(space.p)) {
    throw UnsupportedSpaceError("xnorm: p must be 1, 2 or inf");
  }
  const std::size_t n = grid.size();
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.log_node(grid.k_min + static_cast<long>(i));
    const cxdbl v = f.weighted_at(t);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("xnorm: non-finite signal value at log x = " + std::to_string(t));
    }
    mag[i] = std::abs(v);
  }
  const double h = grid.step();

  if (std::isinf(space.p)) {
    // Lattice sup plus one local refinement pass around the argmax.
    double best = mag[0];
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (mag[i] > best) {
        best = mag[i];
        best_i = i;
      }
    }
    const long kb = grid.k_min + static_cast<long>(best_i);
    const double lo = grid.log_node(kb == grid.k_min ? kb : kb - 1);
    const double hi = grid.log_node(kb == grid.k_max ? kb : kb + 1);
    const double refined =
        quad::scan_max([&](double t) { return std::abs(f.weighted_at(t)); }, lo, hi, 32);
    return std::max(best, refined);
  }

  double acc = 0.0;
  if (space.p == 1.0) {
    acc = 0.5 * (mag.front() + mag.back());
    for (std::size_t i = 1; i + 1 < n; ++i) acc += mag[i];
    return h * acc;
  }
  acc = 0.5 * (mag.front() * mag.front() + mag.back() * mag.back());
  for (std::size_t i = 1; i + 1 < n; ++i) acc += mag[i] * mag[i];
  return std::sqrt(h * acc);
}

SignalFunction translate(const SignalFunction& f, double h) {
  if (!(h > 0.0)) throw std::domain_error("translate: h must be positive");
  SignalFunction out;
  out.c = f.c;
  out.class_tags = f.class_tags;
  const double hc = std::pow(h, f.c);
  const double log_h = std::log(h);
  out.eval = [f, h, hc](double x) { return hc * f.eval(h * x); };
  out.weighted = [f, log_h](double t) { return f.weighted_at(t + log_h); };
  if (f.spectrum) {
    SpectralFunction phi = *f.spectrum;
    const SpectralFunction base = *f.spectrum;
    phi.eval = [base, log_h](double v) { return std::polar(1.0, -v * log_h) * base(v); };
    phi.continuous = base.continuous;
    out.spectrum = phi;
  }
  return out;
}

}  // namespace mellin
