#include "mellin/calculus.hpp"

#include <cmath>
#include <vector>

#include "mellin/distance.hpp"
#include "mellin/kernels.hpp"

namespace mellin {

namespace {

std::vector<double> binomial_row(int r) {
  std::vector<double> row(static_cast<std::size_t>(r) + 1, 1.0);
  for (int j = 1; j <= r; ++j) {
    row[static_cast<std::size_t>(j)] =
        row[static_cast<std::size_t>(j - 1)] * static_cast<double>(r - j + 1) / static_cast<double>(j);
  }
  return row;
}

// Both-sided tail of sum (2k-1)^{-2} beyond k in [-K+1, K].
double boas_tail_sum(int K) { return 1.0 / static_cast<double>(2 * K - 1); }

}  // namespace

cxdbl mellin_difference(const SignalFunction& f, double h, int r, double u) {
  if (!(h > 0.0)) throw std::domain_error("mellin_difference: h must be positive");
  if (!(u > 0.0)) throw std::domain_error("mellin_difference: u must be positive");
  if (r < 1) throw InvalidParametersError("mellin_difference: r must be >= 1");
  const double log_h = std::log(h);
  if (std::abs(static_cast<double>(r) * f.c * log_h) > 700.0) {
    throw std::range_error("mellin_difference: h^{jc} overflows double range");
  }
  const std::vector<double> binom = binomial_row(r);
  cxdbl acc{0.0, 0.0};
  for (int j = 0; j <= r; ++j) {
    const double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom[static_cast<std::size_t>(j)] * f.eval(std::pow(h, j) * u) *
           std::pow(h, static_cast<double>(j) * f.c);
  }
  return acc;
}

double modulus(const SignalFunction& f, const ModulusQuery& query, int h_probe_count,
               const LogUniformGrid& grid) {
  if (query.r < 1) throw InvalidParametersError("modulus: r must be >= 1");
  if (!(query.delta > 0.0)) throw std::domain_error("modulus: delta must be positive");
  if (h_probe_count < 3) throw InvalidParametersError("modulus: need at least 3 probes");
  const int half = (h_probe_count - 1) / 2;
  const double s = query.delta / static_cast<double>(half);
  const std::vector<double> binom = binomial_row(query.r);

  double best = 0.0;
  for (int j = -half; j <= half; ++j) {
    const double log_h = static_cast<double>(j) * s;
    // Weighted log-axis form: the Mellin difference of f is the ordinary
    // forward difference of g with step log h.
    SignalFunction diff;
    diff.c = f.c;
    const int r = query.r;
    diff.weighted = [&f, &binom, r, log_h](double t) {
      cxdbl acc{0.0, 0.0};
      for (int i = 0; i <= r; ++i) {
        const double sign = ((r - i) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom[static_cast<std::size_t>(i)] *
               f.weighted_at(t + static_cast<double>(i) * log_h);
      }
      return acc;
    };
    diff.eval = [diff_w = diff.weighted, c = f.c](double x) {
      return std::pow(x, -c) * diff_w(std::log(x));
    };
    best = std::max(best, xnorm(diff, SpaceDescriptor{query.space.p, f.c}, grid));
  }
  return best;
}

SpectralFunction derivative_spectral(const SpectralFunction& phi, int k) {
  if (k < 1) throw InvalidParametersError("derivative_spectral: k must be >= 1");
  SpectralFunction out = phi;
  if (!phi.support) {
    // Integrability probe on |v|^k |phi(v)|: the weighted density must decay.
    double peak = 0.0;
    for (double v = 0.25; v <= 16.0; v += 0.25) {
      peak = std::max(peak, std::pow(v, k) * std::abs(phi(v)));
      peak = std::max(peak, std::pow(v, k) * std::abs(phi(-v)));
    }
    const double far = std::max(std::pow(1e4, k) * std::abs(phi(1e4)),
                                std::pow(1e4, k) * std::abs(phi(-1e4)));
    const double mid = std::max(std::pow(256.0, k) * std::abs(phi(256.0)),
                                std::pow(256.0, k) * std::abs(phi(-256.0)));
    if (peak > 0.0 && (far > 1e-4 * peak || mid > 1e-1 * peak)) {
      throw NotInDomainError("derivative_spectral: v^k phi(v) fails the integrability probe");
    }
  }
  const SpectralFunction base = phi;
  out.eval = [base, k](double v) {
    return std::pow(cxdbl{0.0, -v}, static_cast<double>(k)) * base(v);
  };
  return out;
}

BoasResult boas_derivative(const SignalFunction& f, double x, const BoasConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("boas_derivative: x must be positive");
  if (cfg.K < 1) throw InvalidParametersError("boas_derivative: K must be >= 1");
  if (!(cfg.T > 0.0)) throw std::domain_error("boas_derivative: T must be positive");
  if (cfg.c != f.c) {
    throw InvalidParametersError("boas_derivative: config exponent differs from the signal's");
  }
  const double t = std::log(x);
  const double far = (static_cast<double>(cfg.K) - 0.5) / cfg.T;
  if (!f.has_weighted() &&
      (std::abs(cfg.c) * far > 700.0 || std::abs(t) + far > 700.0)) {
    // Without a log-axis evaluator the raw node weights e^{(k-1/2)c/T}
    // overflow; refuse instead of returning inf.
    throw std::range_error("boas_derivative: node weights exceed the double range");
  }

  cxdbl acc{0.0, 0.0};
  double sup_node = 0.0;
  for (int k = cfg.K; k >= 1; --k) {
    const double step = (static_cast<double>(k) - 0.5) / cfg.T;
    const cxdbl right = f.weighted_at(t + step);
    const cxdbl left = f.weighted_at(t - step);
    sup_node = std::max({sup_node, std::abs(right), std::abs(left)});
    const double m = 2.0 * k - 1.0;
    const double w = ((k + 1) % 2 == 0 ? 1.0 : -1.0) / (m * m);
    acc += w * (right - left);
  }
  const double scale = 4.0 * cfg.T / kPi;
  BoasResult res;
  res.value = std::pow(x, -f.c) * scale * acc;
  res.tail_bound = scale * sup_node * boas_tail_sum(cfg.K);
  return res;
}

BoasPsiResult boas_psi(double v, double T, int K) {
  if (K < 1) throw InvalidParametersError("boas_psi: K must be >= 1");
  if (!(T > 0.0)) throw std::domain_error("boas_psi: T must be positive");
  // Paired terms collapse to sines; the imaginary parts cancel identically.
  double acc = 0.0;
  for (int k = K; k >= 1; --k) {
    const double m = 2.0 * k - 1.0;
    const double sign = ((k + 1) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * std::sin((static_cast<double>(k) - 0.5) * v / T) / (m * m);
  }
  BoasPsiResult res;
  res.value = (8.0 * T / kPi) * acc;
  res.tail_bound = (4.0 * T / kPi) * boas_tail_sum(K);
  return res;
}

cxdbl boas_remainder(const SpectralFunction& phi, double x, double T, double c,
                     const TailQuadConfig& vcfg) {
  if (!(x > 0.0)) throw std::domain_error("boas_remainder: x must be positive");
  if (!(T > 0.0)) throw std::domain_error("boas_remainder: T must be positive");
  const double sigma = kPi * T;
  const double t = std::log(x);
  const cxdbl inv_2pii{0.0, -1.0 / (2.0 * kPi)};  // 1/(2 pi i)
  auto integrand = [&](double v) {
    const double mult = v - sigma * kernels::sawtooth_phi(v / sigma);
    return mult * phi(v) * std::polar(1.0, -v * t);
  };
  // Kinks of the sawtooth multiplier sit at odd multiples of pi T.
  const cxdbl tail = detail::tail_integral_cx(integrand, sigma, phi.support, sigma,
                                              2.0 * sigma, vcfg.decay_floor);
  return std::pow(x, -c) * inv_2pii * tail;
}

double odd_square_reciprocal_sum(long K) {
  if (K < 1) throw InvalidParametersError("odd_square_reciprocal_sum: K must be >= 1");
  // Ascending magnitudes with Kahan compensation.
  double sum = 0.0;
  double comp = 0.0;
  for (long k = K; k >= 1; --k) {
    const double m = 2.0 * static_cast<double>(k) - 1.0;
    const double term = 2.0 / (m * m);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace mellin
