#pragma once

namespace mellin::kernels {

// sin(pi t) / (pi t) with sinc(0) = 1. Below |t| = 1e-4 the removable
// singularity is evaluated by the Taylor series 1 - (pi t)^2/6 + (pi t)^4/120;
// both branches agree to machine precision at the switch point. Nonzero
// integer arguments return exactly 0 (the reduced argument is exact there),
// which makes lattice interpolation deltas exact.
double sinc(double t);

// lin_c(x) = x^{-c} sinc(log x) for x > 0, with lin_c(1) = 1.
double lin_c(double x, double c);

// Rectangle window: 1 for |x| < pi, 1/2 at |x| = pi, 0 for |x| > pi.
double rect(double x);

// 4-periodic sawtooth |v + 1 - 4*floor((v+3)/4)| - 1; equals v on [-1, 1].
double sawtooth_phi(double v);

}  // namespace mellin::kernels
