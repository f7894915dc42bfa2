#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace mellin {

using cxdbl = std::complex<double>;

namespace quad {

// Composite trapezoid of fn over [a, b] with n uniform panels.
template <typename F>
auto trapezoid(F&& fn, double a, double b, std::size_t panels) {
  const double h = (b - a) / static_cast<double>(panels);
  auto acc = 0.5 * (fn(a) + fn(b));
  for (std::size_t i = 1; i < panels; ++i) {
    acc += fn(a + static_cast<double>(i) * h);
  }
  return h * acc;
}

// 4-point Gauss-Legendre abscissae/weights on [-1, 1].
inline constexpr double kGauss4X[4] = {-0.8611363115940526, -0.3399810435848563,
                                       0.3399810435848563, 0.8611363115940526};
inline constexpr double kGauss4W[4] = {0.3478548451374538, 0.6521451548625461,
                                       0.6521451548625461, 0.3478548451374538};

// Composite 4-point Gauss-Legendre over [a, b] with the given cell count.
// Open rule: the endpoints a and b are never sampled, so measure-zero
// boundary values (rect edges, support edges) cannot pollute the result.
template <typename F>
auto gauss_cells(F&& fn, double a, double b, std::size_t cells) {
  const double h = (b - a) / static_cast<double>(cells);
  decltype(fn(a) * 0.0) acc{};
  for (std::size_t i = 0; i < cells; ++i) {
    const double mid = a + (static_cast<double>(i) + 0.5) * h;
    const double half = 0.5 * h;
    decltype(acc) cell{};
    for (int g = 0; g < 4; ++g) {
      cell += kGauss4W[g] * fn(mid + half * kGauss4X[g]);
    }
    acc += half * cell;
  }
  return acc;
}

// Trapezoid of values[j] * exp(i*w*(t0 + j*h)) for j = 0..n-1.
// The phase rotation is applied by complex recurrence and re-synchronized
// periodically to keep the accumulated rounding below ~1e-13 relative.
inline cxdbl oscillatory_trapezoid(const std::vector<cxdbl>& values, double t0,
                                   double h, double w) {
  const std::size_t n = values.size();
  if (n < 2) return {0.0, 0.0};
  const cxdbl rot = std::polar(1.0, w * h);
  cxdbl phase = std::polar(1.0, w * t0);
  cxdbl acc = 0.5 * values[0] * phase;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (j % 256 == 0) {
      phase = std::polar(1.0, w * (t0 + static_cast<double>(j) * h));
    } else {
      phase *= rot;
    }
    acc += values[j] * phase;
  }
  phase = std::polar(1.0, w * (t0 + static_cast<double>(n - 1) * h));
  acc += 0.5 * values[n - 1] * phase;
  return h * acc;
}

// Maximum of fn over [lo, hi]: uniform scan with n panels, then a
// golden-section polish inside the bracket around the best node.
template <typename F>
double scan_max(F&& fn, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  double best = fn(lo);
  std::size_t best_i = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double v = fn(lo + static_cast<double>(i) * h);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double a = lo + (best_i == 0 ? 0.0 : static_cast<double>(best_i - 1) * h);
  double b = lo + static_cast<double>(best_i == n ? n : best_i + 1) * h;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = fn(x1);
    }
  }
  return std::max({best, f1, f2});
}

}  // namespace quad
}  // namespace mellin
