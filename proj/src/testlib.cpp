#include "mellin/testlib.hpp"

#include <cmath>

#include "mellin/distance.hpp"
#include "mellin/kernels.hpp"

namespace mellin::testlib {

namespace {

// w_s(z) = Int_{-1}^{1} (1 - u^2)^s cos(zu) du.
// Small |z|: Taylor series with the moment recurrence; large |z|: the
// closed form 2^{s+1} s! j_s(z) / z^s with the spherical Bessel j_s from
// forward recurrence (stable here since s << |z|).
double poly_window_transform(double z, int s) {
  const double az = std::fabs(z);
  if (az < 16.0) {
    double i0 = 2.0;
    for (int j = 1; j <= s; ++j) {
      i0 *= 2.0 * j / (2.0 * j + 1.0);
    }
    double term = i0;
    double acc = term;
    const double z2 = z * z;
    for (int m = 1; m <= 80; ++m) {
      term *= -z2 / (2.0 * m * (2.0 * m + 2.0 * s + 1.0));
      acc += term;
      if (std::fabs(term) < 1e-22 * std::fabs(acc) + 1e-300) break;
    }
    return acc;
  }
  double jn_prev = std::sin(az) / az;
  double jn = std::sin(az) / (az * az) - std::cos(az) / az;
  for (int n = 1; n < s; ++n) {
    const double jn_next = (2.0 * n + 1.0) / az * jn - jn_prev;
    jn_prev = jn;
    jn = jn_next;
  }
  double fact = 1.0;
  for (int j = 2; j <= s; ++j) fact *= j;
  return std::pow(2.0, s + 1) * fact * jn / std::pow(az, s);
}

SignalFunction make_signal(double c, std::function<cxdbl(double)> g) {
  SignalFunction f;
  f.c = c;
  f.weighted = std::move(g);
  f.eval = [w = f.weighted, c](double x) {
    if (!(x > 0.0)) throw std::domain_error("catalog signal: x must be positive");
    return std::pow(x, -c) * w(std::log(x));
  };
  return f;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

TestPair make_sinc_shifted(double T, double c) {
  TestPair e;
  e.name = "sinc_shifted";
  e.f = make_signal(c, [T](double t) { return cxdbl{kernels::sinc(2.0 * T * t - 1.0), 0.0}; });
  e.phi.support = 2.0 * kPi * T;
  e.phi.eval = [T](double v) {
    return std::polar(1.0 / (2.0 * T), v / (2.0 * T)) * kernels::rect(v / (2.0 * T));
  };
  e.phi.l1 = e.phi.l2 = e.phi.linf = true;
  e.phi.continuous = false;
  e.f.spectrum = e.phi;
  e.class_tags = {"band_limited_excess", "slow_decay"};
  e.analytic_values = {{"dist1_at_pi_T", {kPi, Provenance::analytic}},
                       {"remainder_sup", {1.0, Provenance::analytic}},
                       {"lattice_sample_sup", {0.0, Provenance::exact}}};
  e.roundtrip_cfg.t_lo = -1000.0;
  e.roundtrip_cfg.t_hi = 1000.0;
  e.roundtrip_cfg.t_step = 1.0 / 32.0;
  e.roundtrip_cfg.v_step = 1.0 / 64.0;
  e.roundtrip_cfg.decay_floor = 1e-3;
  e.roundtrip_tol = 1e-2;
  e.slow_decay = true;
  return e;
}

TestPair make_sinc_centered(double T, double c) {
  TestPair e;
  e.name = "sinc_centered";
  e.f = make_signal(c, [T](double t) { return cxdbl{kernels::sinc(2.0 * T * t), 0.0}; });
  e.phi.support = 2.0 * kPi * T;
  e.phi.eval = [T](double v) {
    return cxdbl{kernels::rect(v / (2.0 * T)) / (2.0 * T), 0.0};
  };
  e.phi.l1 = e.phi.l2 = e.phi.linf = true;
  e.phi.continuous = false;
  e.f.spectrum = e.phi;
  e.class_tags = {"band_limited_excess", "slow_decay"};
  e.analytic_values = {{"dist1_at_pi_T", {kPi, Provenance::analytic}},
                       {"kernel_remainder_sup", {0.5, Provenance::analytic}}};
  e.roundtrip_cfg.t_lo = -1000.0;
  e.roundtrip_cfg.t_hi = 1000.0;
  e.roundtrip_cfg.t_step = 1.0 / 32.0;
  e.roundtrip_cfg.v_step = 1.0 / 64.0;
  e.roundtrip_cfg.decay_floor = 1e-3;
  e.roundtrip_tol = 1e-2;
  e.slow_decay = true;
  return e;
}

TestPair make_gauss_log(double c) {
  TestPair e;
  e.name = "gauss_log";
  e.f = make_signal(c, [](double t) { return cxdbl{std::exp(-0.5 * t * t), 0.0}; });
  e.phi.eval = [](double v) {
    return cxdbl{std::sqrt(2.0 * kPi) * std::exp(-0.5 * v * v), 0.0};
  };
  e.phi.l1 = e.phi.l2 = e.phi.linf = e.phi.continuous = true;
  e.f.spectrum = e.phi;
  e.class_tags = {"smooth", "sobolev_all", "lipschitz_all"};
  e.analytic_values = {
      {"xnorm2", {std::pow(kPi, 0.25), Provenance::analytic}},
      {"phi_at_0", {std::sqrt(2.0 * kPi), Provenance::analytic}},
      {"dist1_sigma_2", {2.0 * kPi * std::erfc(std::sqrt(2.0)), Provenance::analytic}}};
  e.roundtrip_tol = 1e-8;
  e.weighted_derivs = {
      [](double t) { return cxdbl{std::exp(-0.5 * t * t), 0.0}; },
      [](double t) { return cxdbl{-t * std::exp(-0.5 * t * t), 0.0}; },
      [](double t) { return cxdbl{(t * t - 1.0) * std::exp(-0.5 * t * t), 0.0}; }};
  return e;
}

TestPair make_bump_bl(double sigma0, double c) {
  constexpr int kS = 4;        // window power
  constexpr double kA = 0.5;   // cosine frequency
  TestPair e;
  e.name = "bump_bl";
  auto window_w = [sigma0](double tau, int s) {
    return sigma0 * poly_window_transform(sigma0 * tau, s);
  };
  auto g0 = [window_w](double t) {
    return cxdbl{(window_w(t - kA, kS) + window_w(t + kA, kS)) / (4.0 * kPi), 0.0};
  };
  auto wprime = [window_w, sigma0](double tau) {
    return -sigma0 * sigma0 * tau / (2.0 * (kS + 1.0)) * window_w(tau, kS + 1);
  };
  auto g1 = [wprime](double t) {
    return cxdbl{(wprime(t - kA) + wprime(t + kA)) / (4.0 * kPi), 0.0};
  };
  auto wsecond = [window_w, sigma0](double tau) {
    const double inner = window_w(tau, kS + 1) -
                         sigma0 * sigma0 * tau * tau / (2.0 * (kS + 2.0)) * window_w(tau, kS + 2);
    return -sigma0 * sigma0 / (2.0 * (kS + 1.0)) * inner;
  };
  auto g2 = [wsecond](double t) {
    return cxdbl{(wsecond(t - kA) + wsecond(t + kA)) / (4.0 * kPi), 0.0};
  };
  e.f = make_signal(c, g0);
  e.phi.support = sigma0;
  e.phi.eval = [sigma0](double v) {
    const double u = v / sigma0;
    const double win = std::pow(1.0 - u * u, kS);
    return cxdbl{std::cos(kA * v) * win, 0.0};
  };
  e.phi.l1 = e.phi.l2 = e.phi.linf = e.phi.continuous = true;
  e.f.spectrum = e.phi;
  e.class_tags = {"band_limited"};
  e.analytic_values = {{"phi_at_0", {1.0, Provenance::exact}},
                       {"dist_beyond_support", {0.0, Provenance::exact}}};
  e.roundtrip_cfg.t_lo = -200.0;
  e.roundtrip_cfg.t_hi = 200.0;
  e.roundtrip_cfg.decay_floor = 1e-9;  // polynomial (t^-5) tail
  e.roundtrip_tol = 1e-8;
  e.weighted_derivs = {g0, g1, g2};
  return e;
}

TestPair make_sobolev_m(int m, double c) {
  if (m != 2 && m != 3) {
    throw InvalidParametersError("sobolev_m: only m in {2, 3} carries closed forms");
  }
  TestPair e;
  e.name = "sobolev_m";
  if (m == 2) {
    e.f = make_signal(c, [](double t) {
      const double a = std::fabs(t);
      return cxdbl{(1.0 + a) * std::exp(-a) / 4.0, 0.0};
    });
    e.weighted_derivs = {
        e.f.weighted,
        [](double t) { return cxdbl{-t * std::exp(-std::fabs(t)) / 4.0, 0.0}; },
        [](double t) {
          const double a = std::fabs(t);
          return cxdbl{(a - 1.0) * std::exp(-a) / 4.0, 0.0};
        }};
  } else {
    e.f = make_signal(c, [](double t) {
      const double a = std::fabs(t);
      return cxdbl{(3.0 + 3.0 * a + a * a) * std::exp(-a) / 16.0, 0.0};
    });
    e.weighted_derivs = {
        e.f.weighted,
        [](double t) {
          const double a = std::fabs(t);
          return cxdbl{-t * (1.0 + a) * std::exp(-a) / 16.0, 0.0};
        },
        [](double t) {
          const double a = std::fabs(t);
          return cxdbl{(a * a - a - 1.0) * std::exp(-a) / 16.0, 0.0};
        }};
  }
  e.phi.eval = [m](double v) {
    return cxdbl{std::pow(1.0 + v * v, -static_cast<double>(m)), 0.0};
  };
  e.phi.l1 = e.phi.l2 = e.phi.linf = e.phi.continuous = true;
  e.f.spectrum = e.phi;
  e.class_tags = {"sobolev"};
  e.analytic_values = {
      {"m", {static_cast<double>(m), Provenance::exact}},
      {"tail_slope_q1", {-(2.0 * m - 1.0), Provenance::analytic}}};
  e.roundtrip_tol = m == 2 ? 1e-5 : 1e-7;
  return e;
}

TestPair make_lin_kernel(double c) {
  TestPair e;
  e.name = "lin_kernel";
  e.f = make_signal(c, [](double t) { return cxdbl{kernels::sinc(t), 0.0}; });
  e.phi.support = kPi;
  e.phi.eval = [](double v) { return cxdbl{std::fabs(v) <= kPi ? 1.0 : 0.0, 0.0}; };
  e.phi.l1 = e.phi.l2 = e.phi.linf = true;
  e.phi.continuous = false;
  e.f.spectrum = e.phi;
  e.class_tags = {"slow_decay", "kernel"};
  e.analytic_values = {{"phi_plateau", {1.0, Provenance::exact}},
                       {"dist1_sigma_half_pi", {kPi, Provenance::analytic}}};
  e.roundtrip_cfg.t_lo = -1000.0;
  e.roundtrip_cfg.t_hi = 1000.0;
  e.roundtrip_cfg.t_step = 1.0 / 32.0;
  e.roundtrip_cfg.v_step = 1.0 / 64.0;
  e.roundtrip_cfg.decay_floor = 1e-3;
  e.roundtrip_tol = 1e-2;
  e.slow_decay = true;
  return e;
}

}  // namespace

std::vector<TestPair> catalog() {
  return {make_sinc_shifted(2.0, 1.0), make_sinc_centered(2.0, 1.0), make_gauss_log(1.0),
          make_bump_bl(2.0, 1.0),      make_sobolev_m(2, 1.0),       make_lin_kernel(1.0)};
}

TestPair lookup(const std::string& name, const std::map<std::string, double>& params) {
  const double T = get_param(params, "T", 2.0);
  const double c = get_param(params, "c", 1.0);
  const double sigma0 = get_param(params, "sigma0", 2.0);
  const int m = static_cast<int>(get_param(params, "m", 2.0));
  if (!(T > 0.0)) throw InvalidParametersError("lookup: T must be positive");
  if (!(sigma0 > 0.0)) throw InvalidParametersError("lookup: sigma0 must be positive");
  if (name == "sinc_shifted") return make_sinc_shifted(T, c);
  if (name == "sinc_centered") return make_sinc_centered(T, c);
  if (name == "gauss_log") return make_gauss_log(c);
  if (name == "bump_bl") return make_bump_bl(sigma0, c);
  if (name == "sobolev_m") return make_sobolev_m(m, c);
  if (name == "lin_kernel") return make_lin_kernel(c);
  throw NotFoundError("lookup: no catalog entry named '" + name + "'");
}

std::map<long, cxdbl> lattice_samples(const TestPair& entry, double T, long k_lo, long k_hi) {
  if (!(T > 0.0)) throw std::domain_error("lattice_samples: T must be positive");
  std::map<long, cxdbl> out;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double t = static_cast<double>(k) / T;
    const cxdbl g = entry.f.weighted_at(t);
    if (g == cxdbl{0.0, 0.0}) {
      out[k] = g;
      continue;
    }
    const double expo = -entry.f.c * t;
    if (std::abs(expo) > 700.0) {
      throw std::range_error("lattice_samples: sample exceeds the double range");
    }
    out[k] = std::exp(expo) * g;
  }
  return out;
}

SignalFunction theta_signal(const TestPair& entry, int r) {
  if (r < 0 || static_cast<std::size_t>(r) >= entry.weighted_derivs.size()) {
    throw InvalidParametersError("theta_signal: entry lacks the derivative order " +
                                 std::to_string(r));
  }
  SignalFunction out;
  out.c = entry.f.c;
  out.weighted = entry.weighted_derivs[static_cast<std::size_t>(r)];
  out.eval = [w = out.weighted, c = out.c](double x) {
    return std::pow(x, -c) * w(std::log(x));
  };
  return out;
}

double theta_norm(const TestPair& entry, int r, int p, const LogUniformGrid& grid) {
  if (p == 2) {
    auto sq = [&entry, r](double v) {
      const double m = std::pow(std::fabs(v), r) * std::abs(entry.phi(v));
      return m * m;
    };
    const double split = entry.phi.support ? std::min(1.0, *entry.phi.support) : 1.0;
    const double central = quad::gauss_cells(sq, -split, split, 128);
    const double tails = detail::tail_integral(sq, split, entry.phi.support);
    return std::sqrt((central + tails) / (2.0 * kPi));
  }
  if (p == 1) {
    return xnorm(theta_signal(entry, r), SpaceDescriptor{1.0, entry.f.c}, grid);
  }
  throw UnsupportedSpaceError("theta_norm: p must be 1 or 2");
}

}  // namespace mellin::testlib
