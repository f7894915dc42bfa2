#include "mellin/distance.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/calculus.hpp"

namespace mellin {

namespace detail {

namespace {

std::size_t cells_for(double length, double density, std::size_t lo, std::size_t hi) {
  const double want = std::ceil(length * density);
  return std::clamp(static_cast<std::size_t>(std::max(1.0, want)), lo, hi);
}

// One-sided integral over [sigma, S] with Gauss cells.
double bounded_side(const std::function<double(double)>& fn, double a, double b) {
  if (!(b > a)) return 0.0;
  return quad::gauss_cells(fn, a, b, cells_for(b - a, 32.0, 64, 16384));
}

// One-sided integral over [sigma, inf) via v = sigma/u, u in (0, 1].
double unbounded_side(const std::function<double(double)>& fn, double sigma, double sign) {
  auto mapped = [&](double u) {
    const double v = sign * sigma / u;
    return fn(v) * sigma / (u * u);
  };
  // Integrability probe: the mapped integrand must not grow as u -> 0.
  double ref = 0.0;
  for (double u = 0.125; u <= 1.0; u += 0.125) ref = std::max(ref, std::abs(mapped(u)));
  const double far = std::abs(mapped(1e-6));
  const double mid = std::abs(mapped(1e-3));
  if (far > 10.0 * ref + 1e-300 || mid > 10.0 * ref + 1e-300) {
    throw NotInDomainError("tail integral: spectrum tail fails the integrability probe");
  }
  return quad::gauss_cells(mapped, 0.0, 1.0, 512);
}

}  // namespace

double tail_integral(const std::function<double(double)>& fn, double sigma,
                     std::optional<double> support) {
  if (support) {
    if (sigma >= *support) return 0.0;
    return bounded_side(fn, sigma, *support) +
           bounded_side([&](double v) { return fn(-v); }, sigma, *support);
  }
  return unbounded_side(fn, sigma, 1.0) + unbounded_side(fn, sigma, -1.0);
}

cxdbl tail_integral_cx(const std::function<cxdbl(double)>& fn, double sigma,
                       std::optional<double> support, double align_origin,
                       double align_spacing, double decay_floor) {
  double v_end;
  if (support) {
    if (sigma >= *support) return {0.0, 0.0};
    v_end = *support;
  } else {
    // Expand geometrically until the integrand magnitude decays.
    double peak = 0.0;
    v_end = sigma;
    for (int j = 0; j < 48; ++j) {
      const double next = v_end * 2.0;
      double seg = 0.0;
      for (int i = 0; i < 16; ++i) {
        const double v = v_end + (next - v_end) * (i + 0.5) / 16.0;
        seg = std::max({seg, std::abs(fn(v)), std::abs(fn(-v))});
      }
      peak = std::max(peak, seg);
      v_end = next;
      if (peak > 0.0 && seg <= decay_floor * peak) break;
    }
  }
  // Segment boundaries: sigma, v_end, and any alignment points in between.
  std::vector<double> breaks{sigma};
  if (align_spacing > 0.0) {
    double b = align_origin;
    while (b <= sigma) b += align_spacing;
    for (; b < v_end; b += align_spacing) breaks.push_back(b);
  }
  breaks.push_back(v_end);

  cxdbl acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const std::size_t n = cells_for(b - a, 16.0, 8, 4096);
    acc += quad::gauss_cells(fn, a, b, n);
    acc += quad::gauss_cells([&fn](double v) { return fn(-v); }, -b, -a, n);
  }
  return acc;
}

double tail_sup(const std::function<double(double)>& fn, double sigma,
                std::optional<double> support) {
  if (support) {
    if (sigma >= *support) return 0.0;
    const std::size_t n = cells_for(*support - sigma, 256.0, 1024, 65536);
    return std::max(quad::scan_max(fn, sigma, *support, n),
                    quad::scan_max([&](double v) { return fn(-v); }, sigma, *support, n));
  }
  auto up = [&](double u) { return fn(sigma / u); };
  auto down = [&](double u) { return fn(-sigma / u); };
  return std::max(quad::scan_max(up, 1e-9, 1.0, 16384), quad::scan_max(down, 1e-9, 1.0, 16384));
}

}  // namespace detail

namespace {

void validate_query(const DistanceQuery& q) {
  if (!(q.sigma > 0.0)) throw std::domain_error("dist_q: sigma must be positive");
  if (!(q.q >= 1.0)) throw InvalidParametersError("dist_q: q must be >= 1");
  if (q.k < 0) throw InvalidParametersError("dist_q: k must be >= 0");
}

double integrand_weight(double v, int k) {
  return k == 0 ? 1.0 : std::pow(std::abs(v), static_cast<double>(k));
}

// Integral of F over the whole line: central panel plus both tails.
double full_line_integral(const std::function<double(double)>& fn,
                          std::optional<double> support) {
  const double split = support ? std::min(1.0, *support) : 1.0;
  const double central = quad::gauss_cells(fn, -split, split, 128);
  return central + detail::tail_integral(fn, split, support);
}

}  // namespace

double dist_q(const SpectralFunction& phi, const DistanceQuery& query) {
  validate_query(query);
  if (!phi.l1) {
    throw NotInDomainError("dist_q: spectrum must carry the L1 tag (membership in G_c^q)");
  }
  if (std::isinf(query.q)) {
    if (!phi.continuous) {
      throw UnsupportedSpaceError("dist_q: q = inf requires a continuous spectrum");
    }
    return detail::tail_sup(
        [&](double v) { return integrand_weight(v, query.k) * std::abs(phi(v)); }, query.sigma,
        phi.support);
  }
  auto fn = [&](double v) {
    return std::pow(integrand_weight(v, query.k) * std::abs(phi(v)), query.q);
  };
  const double mass = detail::tail_integral(fn, query.sigma, phi.support);
  return std::pow(mass, 1.0 / query.q);
}

double dist_q(const SpectralSamples& samples, const DistanceQuery& query) {
  validate_query(query);
  if (std::isinf(query.q)) {
    throw UnsupportedSpaceError("dist_q: q = inf is not defined for sampled-only spectra");
  }
  samples.validate();
  const double h = samples.v_step();
  const std::size_t n = samples.v_grid.size();
  auto weight_at = [&](std::size_t i) {
    return std::pow(integrand_weight(samples.v_grid[i], query.k) * std::abs(samples.values[i]),
                    query.q);
  };
  double mass = 0.0;
  // Trapezoid over the runs v <= -sigma and v >= sigma, sigma snapped
  // outward to the sample lattice.
  for (int side = 0; side < 2; ++side) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = samples.v_grid[i];
      if ((side == 0 && v >= query.sigma) || (side == 1 && v <= -query.sigma)) idx.push_back(i);
    }
    if (idx.size() < 2) continue;
    double acc = 0.5 * (weight_at(idx.front()) + weight_at(idx.back()));
    for (std::size_t j = 1; j + 1 < idx.size(); ++j) acc += weight_at(idx[j]);
    double run = h * acc;
    if (idx.size() >= 3) {
      // Euler-Maclaurin endpoint correction, one-sided stencils.
      const double dl =
          (-3.0 * weight_at(idx[0]) + 4.0 * weight_at(idx[1]) - weight_at(idx[2])) / (2.0 * h);
      const std::size_t n1 = idx.size() - 1;
      const double dr = (3.0 * weight_at(idx[n1]) - 4.0 * weight_at(idx[n1 - 1]) +
                         weight_at(idx[n1 - 2])) /
                        (2.0 * h);
      run -= h * h / 12.0 * (dr - dl);
    }
    mass += run;
  }
  return std::pow(mass, 1.0 / query.q);
}

std::pair<double, double> dist2_euclidean_check(const SignalFunction& f, const SignalFunction& g,
                                                const LogUniformGrid& grid,
                                                const TransformConfig& cfg) {
  if (f.c != g.c) throw InvalidParametersError("dist2_euclidean_check: Mellin exponents differ");
  if (!f.spectrum || !g.spectrum) {
    throw InvalidParametersError("dist2_euclidean_check: both signals need known spectra");
  }
  const SpectralFunction& pf = *f.spectrum;
  const SpectralFunction& pg = *g.spectrum;
  std::optional<double> support;
  if (pf.support && pg.support) support = std::max(*pf.support, *pg.support);

  auto sq = [&](double v) {
    const double d = std::abs(pf(v) - pg(v));
    return d * d;
  };
  const double lhs = std::sqrt(full_line_integral(sq, support));

  SignalFunction diff;
  diff.c = f.c;
  diff.eval = [f, g](double x) { return f.eval(x) - g.eval(x); };
  diff.weighted = [f, g](double t) { return f.weighted_at(t) - g.weighted_at(t); };
  const double rhs = std::sqrt(2.0 * kPi) * xnorm(diff, SpaceDescriptor{2.0, f.c}, grid);
  (void)cfg;
  return {lhs, rhs};
}

BoundReport lipschitz_bound(const SignalFunction& f, int r, double sigma, double q, int space_p,
                            const LipschitzOptions& opts) {
  if (r < 1) throw InvalidParametersError("lipschitz_bound: r must be >= 1");
  if (!(sigma > 0.0)) throw std::domain_error("lipschitz_bound: sigma must be positive");
  if (!(q >= 1.0)) throw InvalidParametersError("lipschitz_bound: q must be >= 1");
  if (space_p != 1 && space_p != 2) {
    throw InvalidParametersError("lipschitz_bound: space_p must be 1 or 2");
  }
  if (space_p == 2 && !(q <= 2.0)) {
    throw InvalidParametersError("lipschitz_bound: the X^2 bound requires q in [1, 2]");
  }
  const LogUniformGrid grid = opts.grid ? *opts.grid : LogUniformGrid::over(-40.0, 40.0, 64.0);
  const double p = space_p == 1 ? 1.0 : 2.0;
  const double norm_f = xnorm(f, SpaceDescriptor{p, f.c}, grid);
  const double omega_cap = std::pow(2.0, r) * norm_f;
  auto omega = [&](double delta) {
    const double w =
        modulus(f, ModulusQuery{r, delta, SpaceDescriptor{p, f.c}}, opts.probe_count, grid);
    return std::min(w, omega_cap);
  };

  BoundReport rep;
  rep.source = space_p == 1 ? BoundSource::lipschitz_X1 : BoundSource::lipschitz_X2;
  rep.constant_D =
      space_p == 1 ? std::pow(0.5 * (1.0 + kPi), r) : std::sqrt(2.0) * std::pow(kPi, r);
  rep.parameters = {{"r", static_cast<double>(r)}, {"q", q}, {"sigma", sigma}, {"norm", norm_f}};

  if (std::isinf(q)) {
    rep.bound_value = rep.constant_D * omega(1.0 / sigma);
    return rep;
  }
  if (space_p == 1 && r * q <= 1.0) {
    rep.divergent = true;
    rep.bound_value = kInf;
    return rep;
  }
  const double v_max = std::max(opts.v_max_factor * sigma, opts.v_max_min);
  // Substitution w = 1/v maps [sigma, v_max] onto [1/v_max, 1/sigma].
  auto density = [&](double w) {
    const double om = omega(w);
    const double core = space_p == 1 ? om : std::sqrt(w) * om;
    return std::pow(core, q) / (w * w);
  };
  double integral = quad::gauss_cells(density, 1.0 / v_max, 1.0 / sigma, 12);
  // Beyond v_max, extrapolate with the Lipschitz decay model omega ~ delta^r.
  const double om_end = omega(1.0 / v_max);
  if (space_p == 1) {
    integral += std::pow(om_end, q) * v_max / (r * q - 1.0);
  } else {
    integral += std::pow(om_end, q) * std::pow(v_max, 1.0 - 0.5 * q) /
                ((static_cast<double>(r) + 0.5) * q - 1.0);
  }
  rep.parameters["v_max"] = v_max;
  rep.bound_value = rep.constant_D * std::pow(integral, 1.0 / q);
  return rep;
}

BoundReport sobolev_bound(double theta_r_norm, int r, double sigma, double q, int space_p,
                          int derivative_shift) {
  if (r < 1) throw InvalidParametersError("sobolev_bound: r must be >= 1");
  if (!(sigma > 0.0)) throw std::domain_error("sobolev_bound: sigma must be positive");
  if (!(q >= 1.0)) throw InvalidParametersError("sobolev_bound: q must be >= 1");
  if (!(theta_r_norm >= 0.0) || !std::isfinite(theta_r_norm)) {
    throw InvalidParametersError("sobolev_bound: derivative norm must be finite and >= 0");
  }
  if (derivative_shift != 0 && derivative_shift != 1) {
    throw InvalidParametersError("sobolev_bound: derivative_shift must be 0 or 1");
  }
  BoundReport rep;
  rep.parameters = {{"r", static_cast<double>(r)},
                    {"q", q},
                    {"sigma", sigma},
                    {"theta_norm", theta_r_norm},
                    {"shift", static_cast<double>(derivative_shift)}};
  double exponent = 0.0;

  if (space_p == 1) {
    rep.source = BoundSource::sobolev_X1;
    if (std::isinf(q)) {
      rep.constant_D = 1.0;
      exponent = static_cast<double>(r) - static_cast<double>(derivative_shift);
    } else if (derivative_shift == 0) {
      if (!(r * q > 1.0)) throw InvalidParametersError("sobolev_bound: requires r > 1/q");
      rep.constant_D = std::pow(2.0 / (r * q - 1.0), 1.0 / q);
      exponent = static_cast<double>(r) - 1.0 / q;
    } else {
      if (!(r * q - q - 1.0 > 0.0)) {
        throw InvalidParametersError("sobolev_bound: the shifted bound requires r > 1 + 1/q");
      }
      rep.constant_D = std::pow(2.0 / (r * q - q - 1.0), 1.0 / q);
      exponent = static_cast<double>(r) - 1.0 - 1.0 / q;
    }
  } else if (space_p == 2) {
    rep.source = BoundSource::sobolev_X2;
    if (!(q <= 2.0)) throw InvalidParametersError("sobolev_bound: the X^2 bound requires q in [1, 2]");
    if (derivative_shift == 1 &&
        !(static_cast<double>(r) > 1.5 + 1.0 / q)) {
      throw InvalidParametersError("sobolev_bound: the shifted bound requires r > 3/2 + 1/q");
    }
    const int r_eff = r - derivative_shift;
    if (q == 2.0) {
      rep.constant_D = 1.0 / std::sqrt(2.0 * kPi);
    } else {
      const double denom = (2.0 * r_eff + 1.0) * q - 2.0;
      if (!(denom > 0.0)) {
        throw InvalidParametersError("sobolev_bound: requires (2r+1) q > 2");
      }
      rep.constant_D = std::sqrt(2.0 * kPi) * std::pow((4.0 - 2.0 * q) / denom, 1.0 / q - 0.5);
    }
    exponent = static_cast<double>(r_eff) + 0.5 - 1.0 / q;
  } else {
    throw InvalidParametersError("sobolev_bound: space_p must be 1 or 2");
  }
  rep.parameters["exponent"] = exponent;
  rep.bound_value = rep.constant_D * theta_r_norm * std::pow(sigma, -exponent);
  return rep;
}

double rate_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) {
    throw InvalidParametersError("rate_fit: need at least 4 (sigma, dist) points");
  }
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(points.size()), ly(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first > 0.0)) throw InvalidParametersError("rate_fit: sigma must be positive");
    if (!(points[i].second > 0.0)) {
      throw DegenerateFitError("rate_fit: zero distance makes the log-log fit degenerate");
    }
    lx[i] = std::log(points[i].first);
    ly[i] = std::log(points[i].second);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(points.size());
  const double my = sy / static_cast<double>(points.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (!(den > 0.0)) throw DegenerateFitError("rate_fit: sigma values do not spread");
  return num / den;
}

BernsteinCheck bernstein_extended_check(const SignalFunction& f, double T,
                                        const LogUniformGrid& grid, const TransformConfig& cfg) {
  if (!(T > 0.0)) throw std::domain_error("bernstein_extended_check: T must be positive");
  if (!f.spectrum) {
    throw NotInDomainError("bernstein_extended_check: signal needs a known spectrum");
  }
  // Hypothesis: v phi(v) absolutely integrable; derivative_spectral probes it.
  const SpectralFunction theta_phi = derivative_spectral(*f.spectrum, 1);
  auto sq = [&](double v) {
    const double m = std::abs(theta_phi(v));
    return m * m;
  };
  const double lhs =
      std::sqrt(full_line_integral(sq, theta_phi.support) / (2.0 * kPi));
  const double norm_f = xnorm(f, SpaceDescriptor{2.0, f.c}, grid);
  const double tail = dist_q(*f.spectrum, DistanceQuery{kPi * T, 2.0, 1});
  const double rhs = kPi * T * norm_f + tail / std::sqrt(2.0 * kPi);
  BernsteinCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.satisfied = lhs <= rhs + 1e-9 * std::max(1.0, rhs);
  (void)cfg;
  return out;
}

}  // namespace mellin
