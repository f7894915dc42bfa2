#pragma once

#include <map>
#include <optional>

#include "mellin/core.hpp"

namespace mellin {

// Exponential-sampling series parameters: samples live on the lattice
// e^{k/T} for k in [k_lo, k_hi].
struct SamplingConfig {
  double T;
  double c;
  long k_lo;
  long k_hi;
  double kernel_tolerance = 1e-3;

  // Truncation window of the given half width centered on the index nearest
  // T log x, where the kernel tail constant is smallest.
  static SamplingConfig centered(double T, double c, double x, long half_width,
                                 double kernel_tolerance = 1e-3);
};

struct ReconstructionReport {
  cxdbl value{0.0, 0.0};
  std::optional<cxdbl> remainder;      // f(x) - value, when a reference f is known
  double certified_bound = 0.0;        // x^{-c} dist_1(f, B^2_{c,pi T}) / pi
  double truncation_estimate = 0.0;    // series truncation, from the end samples
};

// Reconstruction sum_k f(e^{k/T}) lin_{c/T}(e^{-k} x^T) over the configured
// index range, computed on the weighted log axis. Missing samples raise
// IncompleteDataError.
ReconstructionReport exp_sampling_reconstruct(const std::map<long, cxdbl>& samples, double x,
                                              const SamplingConfig& cfg);

// Reconstruction of a known signal: fills the remainder and, when the
// spectrum is available, the certified bound.
ReconstructionReport exp_sampling_report(const SignalFunction& f, double x,
                                         const SamplingConfig& cfg);

// (1/pi) dist_1(f, B^2_{c,pi T}): the certified sup-norm bound on the
// sampling remainder. Shares the distance code path.
double exp_sampling_bound(const SpectralFunction& phi, double T);

struct KernelApplyResult {
  cxdbl value{0.0, 0.0};
  double tail_estimate = 0.0;
};

struct KernelQuadConfig {
  double window = 200.0;     // half width of the log-axis window
  double step = 1.0 / 64.0;  // trapezoid step
  double tolerance = 1e-2;   // reject when the tail estimate exceeds this
};

// Mellin reproducing-kernel integral T Int f(y) lin_{c/T}((x/y)^T) dy/y,
// evaluated as a sinc convolution on the log axis over a finite window with
// a 1/window kernel tail estimate.
KernelApplyResult reproducing_kernel_apply(const SignalFunction& f, double x, double T, double c,
                                           const KernelQuadConfig& cfg = {});

struct KernelRemainderResult {
  cxdbl value{0.0, 0.0};
  double certified_bound = 0.0;  // x^{-c} dist_1 / (2 pi)
};

// Remainder (x^{-c}/2 pi) Int_{|t| >= pi T} phi(t) x^{-it} dt of the
// reproducing-kernel formula, with its certified bound.
KernelRemainderResult reproducing_kernel_remainder(const SpectralFunction& phi, double x, double T,
                                                   double c);

}  // namespace mellin
