#include "mellin/sampling.hpp"

#include <cmath>
#include <vector>

#include "mellin/distance.hpp"
#include "mellin/kernels.hpp"

namespace mellin {

namespace {

// Weighted sample g_k = e^{kc/T} f(e^{k/T}); exact zeros stay zero so the
// scaling cannot manufacture inf * 0.
cxdbl weighted_sample(cxdbl sample, long k, double c, double T) {
  if (sample == cxdbl{0.0, 0.0}) return sample;
  const double expo = static_cast<double>(k) * c / T;
  if (std::abs(expo) > 700.0) {
    throw std::range_error("exp_sampling: sample weight exceeds the double range");
  }
  return std::exp(expo) * sample;
}

double harmonic(long n) {
  double acc = 0.0;
  for (long j = n; j >= 1; --j) acc += 1.0 / static_cast<double>(j);
  return acc;
}

}  // namespace

SamplingConfig SamplingConfig::centered(double T, double c, double x, long half_width,
                                        double kernel_tolerance) {
  if (!(x > 0.0)) throw std::domain_error("SamplingConfig::centered: x must be positive");
  const long mid = static_cast<long>(std::lround(T * std::log(x)));
  return SamplingConfig{T, c, mid - half_width, mid + half_width, kernel_tolerance};
}

ReconstructionReport exp_sampling_reconstruct(const std::map<long, cxdbl>& samples, double x,
                                              const SamplingConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("exp_sampling_reconstruct: x must be positive");
  if (!(cfg.T > 0.0)) throw std::domain_error("exp_sampling_reconstruct: T must be positive");
  if (cfg.k_lo > cfg.k_hi) throw InvalidParametersError("exp_sampling_reconstruct: empty k range");

  const double t = std::log(x);
  const std::size_t n = static_cast<std::size_t>(cfg.k_hi - cfg.k_lo + 1);
  std::vector<cxdbl> g(n);
  for (long k = cfg.k_lo; k <= cfg.k_hi; ++k) {
    const auto it = samples.find(k);
    if (it == samples.end()) {
      throw IncompleteDataError("exp_sampling_reconstruct: missing sample at k = " +
                                std::to_string(k));
    }
    g[static_cast<std::size_t>(k - cfg.k_lo)] = weighted_sample(it->second, k, cfg.c, cfg.T);
  }

  // lin_{c/T}(e^{-k} x^T) = x^{-c} e^{kc/T} sinc(T log x - k), so the series
  // is a plain sinc interpolation of the weighted samples.
  cxdbl acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(cfg.k_lo + static_cast<long>(i));
    acc += g[i] * kernels::sinc(cfg.T * t - k);
  }

  ReconstructionReport rep;
  rep.value = std::pow(x, -cfg.c) * acc;

  // Truncation estimate: the largest weighted sample near the range ends
  // times the summed 1/|k| decay of the kernel over one more window length.
  const std::size_t edge = std::max<std::size_t>(3, n / 10);
  double sup_end = 0.0;
  for (std::size_t i = 0; i < std::min(edge, n); ++i) {
    sup_end = std::max({sup_end, std::abs(g[i]), std::abs(g[n - 1 - i])});
  }
  rep.truncation_estimate =
      std::pow(x, -cfg.c) * sup_end * (2.0 / kPi) * harmonic(static_cast<long>(n));
  return rep;
}

ReconstructionReport exp_sampling_report(const SignalFunction& f, double x,
                                         const SamplingConfig& cfg) {
  std::map<long, cxdbl> samples;
  for (long k = cfg.k_lo; k <= cfg.k_hi; ++k) {
    const double t = static_cast<double>(k) / cfg.T;
    const cxdbl g = f.weighted_at(t);
    if (g == cxdbl{0.0, 0.0}) {
      samples[k] = g;
      continue;
    }
    const double expo = -f.c * t;
    if (std::abs(expo) > 700.0) {
      throw std::range_error("exp_sampling_report: lattice sample exceeds the double range");
    }
    samples[k] = std::exp(expo) * g;
  }
  ReconstructionReport rep = exp_sampling_reconstruct(samples, x, cfg);
  rep.remainder = f.eval(x) - rep.value;
  if (f.spectrum) {
    rep.certified_bound = std::pow(x, -f.c) * exp_sampling_bound(*f.spectrum, cfg.T);
  }
  return rep;
}

double exp_sampling_bound(const SpectralFunction& phi, double T) {
  if (!(T > 0.0)) throw std::domain_error("exp_sampling_bound: T must be positive");
  return dist_q(phi, DistanceQuery{kPi * T, 1.0, 0}) / kPi;
}

KernelApplyResult reproducing_kernel_apply(const SignalFunction& f, double x, double T, double c,
                                           const KernelQuadConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("reproducing_kernel_apply: x must be positive");
  if (!(T > 0.0)) throw std::domain_error("reproducing_kernel_apply: T must be positive");
  if (c != f.c) {
    throw InvalidParametersError("reproducing_kernel_apply: exponent differs from the signal's");
  }
  const double t = std::log(x);
  const std::size_t panels =
      static_cast<std::size_t>(std::ceil(2.0 * cfg.window / cfg.step));
  const double h = 2.0 * cfg.window / static_cast<double>(panels);

  // T Int f(y) lin_{c/T}((x/y)^T) dy/y = x^{-c} T Int g(s) sinc(T (t-s)) ds.
  cxdbl acc{0.0, 0.0};
  double abs_mass = 0.0;
  for (std::size_t j = 0; j <= panels; ++j) {
    const double s = t - cfg.window + static_cast<double>(j) * h;
    const cxdbl gv = f.weighted_at(s);
    const double w = (j == 0 || j == panels) ? 0.5 : 1.0;
    acc += w * gv * kernels::sinc(T * (t - s));
    abs_mass += w * std::abs(gv);
  }
  KernelApplyResult out;
  out.value = std::pow(x, -c) * T * h * acc;
  // Kernel tail past the window: |sinc(T u)| <= 1/(pi T |u|), so the missing
  // mass is at most the X^1 norm over 1/(pi window).
  out.tail_estimate = h * abs_mass / (kPi * cfg.window);
  if (out.tail_estimate > cfg.tolerance) {
    throw WindowTooSmallError("reproducing_kernel_apply: kernel tail estimate exceeds tolerance");
  }
  return out;
}

KernelRemainderResult reproducing_kernel_remainder(const SpectralFunction& phi, double x, double T,
                                                   double c) {
  if (!(x > 0.0)) throw std::domain_error("reproducing_kernel_remainder: x must be positive");
  if (!(T > 0.0)) throw std::domain_error("reproducing_kernel_remainder: T must be positive");
  const double t = std::log(x);
  auto fn = [&](double v) { return phi(v) * std::polar(1.0, -v * t); };
  const cxdbl tail = detail::tail_integral_cx(fn, kPi * T, phi.support, 0.0, 0.0);
  KernelRemainderResult out;
  out.value = std::pow(x, -c) * tail / (2.0 * kPi);
  if (phi.l1) {
    out.certified_bound =
        std::pow(x, -c) * dist_q(phi, DistanceQuery{kPi * T, 1.0, 0}) / (2.0 * kPi);
  }
  return out;
}

}  // namespace mellin
