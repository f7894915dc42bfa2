#include "mellin/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mellin::kernels {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSincSeriesThreshold = 1e-4;
}  // namespace

double sinc(double t) {
  const double a = std::fabs(t);
  if (a < kSincSeriesThreshold) {
    const double z2 = (kPi * t) * (kPi * t);
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  if (a >= 1.0 && t == std::nearbyint(t)) return 0.0;
  return std::sin(kPi * t) / (kPi * t);
}

double lin_c(double x, double c) {
  if (!(x > 0.0)) throw std::domain_error("lin_c: x must be positive");
  if (x == 1.0) return 1.0;
  return std::pow(x, -c) * sinc(std::log(x));
}

double rect(double x) {
  const double a = std::fabs(x);
  if (a < kPi) return 1.0;
  if (a == kPi) return 0.5;
  return 0.0;
}

double sawtooth_phi(double v) {
  return std::fabs(v + 1.0 - 4.0 * std::floor((v + 3.0) / 4.0)) - 1.0;
}

}  // namespace mellin::kernels
