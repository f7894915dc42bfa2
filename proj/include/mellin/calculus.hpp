#pragma once

#include <optional>

#include "mellin/core.hpp"
#include "mellin/transform.hpp"

namespace mellin {

struct ModulusQuery {
  int r;
  double delta;
  SpaceDescriptor space;
};

// Truncation window for the Boas series: k in [-K+1, K], summed in pairs
// (k, 1-k) so the x^{-c} mode cancels exactly.
struct BoasConfig {
  double T;
  int K;
  double c = 0.0;
};

struct BoasResult {
  cxdbl value{0.0, 0.0};
  double tail_bound = 0.0;  // (4T/pi) * sup|x^c f| * tail of (2k-1)^{-2}
};

struct BoasPsiResult {
  double value = 0.0;
  double tail_bound = 0.0;
};

// r-th Mellin difference: sum_{j=0}^r (-1)^{r-j} C(r,j) f(h^j u) h^{jc}.
cxdbl mellin_difference(const SignalFunction& f, double h, int r, double u);

// Modulus of smoothness omega_r(f, delta, X^p_c): supremum of the difference
// norm over a uniform probe lattice of log h in [-delta, delta]. Probes are
// integer multiples of 2*delta/(n-1), so doubling delta while growing n to
// 2n-1 keeps probe sets nested and the computed modulus exactly monotone.
// The returned value is a lower bound of the true supremum.
double modulus(const SignalFunction& f, const ModulusQuery& query, int h_probe_count,
               const LogUniformGrid& grid);

// Spectral Mellin derivative of order k: multiplies the density by (-iv)^k.
// Throws NotInDomainError when v^k phi(v) fails the integrability probe.
SpectralFunction derivative_spectral(const SpectralFunction& phi, int k);

// Boas differentiation series
//   (4T/pi) sum_k ((-1)^{k+1}/(2k-1)^2) e^{(k-1/2)c/T} f(x e^{(k-1/2)/T})
// truncated per cfg, evaluated through the weighted signal. The reported
// tail bound uses sup|x^c f| over the evaluated nodes.
BoasResult boas_derivative(const SignalFunction& f, double x, const BoasConfig& cfg);

// The series multiplier psi(v) = (4Ti/pi) sum_k ((-1)^{k+1}/(2k-1)^2)
// e^{-i(k-1/2)v/T}, evaluated in the symmetrically paired (purely real)
// form. Equals v on [-pi T, pi T] up to the reported tail bound.
BoasPsiResult boas_psi(double v, double T, int K);

// Options for the remainder tail integration.
struct TailQuadConfig {
  double decay_floor = 1e-14;
};

// Boas remainder (1/2 pi i) Int_{|v| >= pi T} [v - pi T phi_saw(v/(pi T))]
// phi(v) x^{-c-iv} dv, with cells aligned to the sawtooth kinks.
cxdbl boas_remainder(const SpectralFunction& phi, double x, double T, double c,
                     const TailQuadConfig& vcfg = {});

// Partial sum of sum_{k in [-K+1, K]} (2k-1)^{-2}; converges to pi^2/4.
double odd_square_reciprocal_sum(long K);

}  // namespace mellin
