#include <doctest.h>

#include <cmath>

#include "mellin/calculus.hpp"
#include "mellin/distance.hpp"
#include "mellin/kernels.hpp"
#include "mellin/testlib.hpp"

using namespace mellin;

namespace {

const LogUniformGrid kGrid = LogUniformGrid::over(-40.0, 40.0, 64.0);

SignalFunction difference_signal(const SignalFunction& f, double h, int r) {
  const double log_h = std::log(h);
  SignalFunction d;
  d.c = f.c;
  d.weighted = [f, log_h, r](double t) {
    cxdbl acc{0.0, 0.0};
    double binom = 1.0;
    for (int j = 0; j <= r; ++j) {
      const double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binom * f.weighted_at(t + j * log_h);
      binom *= static_cast<double>(r - j) / static_cast<double>(j + 1);
    }
    return acc;
  };
  d.eval = [w = d.weighted, c = f.c](double x) { return std::pow(x, -c) * w(std::log(x)); };
  return d;
}

}  // namespace

TEST_CASE("mellin difference vanishes at h=1") {
  const auto e = testlib::lookup("gauss_log");
  for (int r : {1, 2, 3}) {
    CHECK(std::abs(mellin_difference(e.f, 1.0, r, 0.7)) == 0.0);
  }
}

TEST_CASE("first difference matches the translation") {
  const auto e = testlib::lookup("gauss_log");
  const double h = 1.3, u = 0.8;
  const cxdbl lhs = mellin_difference(e.f, h, 1, u);
  const cxdbl rhs = translate(e.f, h).eval(u) - e.f.eval(u);
  CHECK(std::abs(lhs - rhs) <= 1e-14);
}

TEST_CASE("mellin difference overflow guard") {
  SignalFunction f;
  f.c = 50.0;
  f.eval = [](double) { return cxdbl{1.0, 0.0}; };
  CHECK_THROWS_AS(mellin_difference(f, std::exp(20.0), 3, 1.0), std::range_error);
}

TEST_CASE("difference multiplier identity in the spectral domain") {
  // Catalog entries with rapidly decaying profiles; the slow-decay sinc
  // entries only admit loose-tolerance transforms, far above 1e-8.
  for (const char* name : {"gauss_log", "bump_bl", "sobolev_m"}) {
    const auto e = testlib::lookup(name);
    const double h = std::exp(0.1);
    const std::vector<double> vg{0.0, 1.0, 2.0};
    const TransformConfig cfg = e.roundtrip_cfg;
    for (int r : {1, 2}) {
      const auto base = mellin_forward(e.f, vg, cfg.t_lo, cfg.t_hi, cfg.t_step, cfg.decay_floor);
      const auto diff = mellin_forward(difference_signal(e.f, h, r), vg, cfg.t_lo, cfg.t_hi,
                                       cfg.t_step, cfg.decay_floor * 4.0);
      for (std::size_t i = 0; i < vg.size(); ++i) {
        const cxdbl mult = std::pow(std::polar(1.0, -vg[i] * std::log(h)) - 1.0, r);
        INFO(name << " r=" << r << " v=" << vg[i]);
        CHECK(std::abs(diff.values[i] - mult * base.values[i]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("modulus vanishes with delta") {
  const auto e = testlib::lookup("gauss_log");
  const double w = modulus(e.f, ModulusQuery{1, 1e-8, SpaceDescriptor{1.0, 1.0}}, 9, kGrid);
  CHECK(w < 1e-6);
}

TEST_CASE("modulus is bounded by 2^r times the norm") {
  // The X^1 members of the catalog; lin_c and the sinc pair fall outside
  // X^1_c, so the bound's right side is not finite for them.
  for (const char* name : {"gauss_log", "sobolev_m", "bump_bl"}) {
    const auto e = testlib::lookup(name);
    for (double p : {1.0, 2.0}) {
      const double n = xnorm(e.f, SpaceDescriptor{p, 1.0}, kGrid);
      for (int r : {1, 2}) {
        const double w = modulus(e.f, ModulusQuery{r, 0.5, SpaceDescriptor{p, 1.0}}, 33, kGrid);
        CHECK(w <= std::pow(2.0, r) * n * (1.0 + 1e-9));
      }
    }
  }
}

TEST_CASE("modulus scaling inequality") {
  const auto e = testlib::lookup("gauss_log");
  const double delta = 0.1;
  for (double lambda : {2.0, 3.5}) {
    for (int r : {1, 2}) {
      const double base = modulus(e.f, ModulusQuery{r, delta, SpaceDescriptor{1.0, 1.0}}, 129, kGrid);
      const double scaled =
          modulus(e.f, ModulusQuery{r, lambda * delta, SpaceDescriptor{1.0, 1.0}}, 129, kGrid);
      CHECK(scaled <= std::pow(1.0 + lambda, r) * base * (1.0 + 1e-6) + 1e-12);
    }
  }
}

TEST_CASE("modulus monotonicity is exact on nested probe lattices") {
  for (const char* name : {"gauss_log", "sobolev_m", "bump_bl"}) {
    const auto e = testlib::lookup(name);
    // Probe step is shared, so the smaller-delta probe set is a subset.
    const double w1 = modulus(e.f, ModulusQuery{2, 0.25, SpaceDescriptor{2.0, 1.0}}, 33, kGrid);
    const double w2 = modulus(e.f, ModulusQuery{2, 0.5, SpaceDescriptor{2.0, 1.0}}, 65, kGrid);
    const double w3 = modulus(e.f, ModulusQuery{2, 1.0, SpaceDescriptor{2.0, 1.0}}, 129, kGrid);
    CHECK(w1 <= w2);
    CHECK(w2 <= w3);
  }
}

TEST_CASE("spectral derivative matches the log-axis finite difference") {
  const auto e = testlib::lookup("gauss_log");
  const SpectralFunction dphi = derivative_spectral(e.phi, 1);
  const std::vector<double> xs{0.5, 1.0, 2.0};
  const auto spectral = mellin_inverse(dphi, 1.0, xs, -40.0, 40.0, 1.0 / 128.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Independent oracle: Theta_c f = x f'(x) + c f(x) with a central
    // difference for f'.
    const double x = xs[i];
    const double hx = 1e-6 * x;
    const cxdbl fprime = (e.f.eval(x + hx) - e.f.eval(x - hx)) / (2.0 * hx);
    const cxdbl oracle = x * fprime + 1.0 * e.f.eval(x);
    CHECK(std::abs(spectral[i] - oracle) <= 1e-6);
  }
}

TEST_CASE("spectral derivative of the zero spectrum is zero") {
  SpectralFunction zero;
  zero.support = 1.0;
  zero.eval = [](double) { return cxdbl{0.0, 0.0}; };
  const SpectralFunction d = derivative_spectral(zero, 1);
  CHECK(std::abs(d(0.5)) == 0.0);
}

TEST_CASE("second spectral derivative is the square of the first") {
  const auto e = testlib::lookup("gauss_log");
  const SpectralFunction d1 = derivative_spectral(derivative_spectral(e.phi, 1), 1);
  const SpectralFunction d2 = derivative_spectral(e.phi, 2);
  for (double v : {-2.0, 0.3, 1.7}) {
    CHECK(std::abs(d1(v) - d2(v)) <= 1e-15 * std::abs(d2(v)) + 1e-18);
  }
}

TEST_CASE("spectral derivative rejects non-integrable tails") {
  SpectralFunction heavy;
  heavy.l1 = true;
  heavy.eval = [](double v) { return cxdbl{1.0 / (1.0 + v * v), 0.0}; };
  CHECK_THROWS_AS(derivative_spectral(heavy, 2), NotInDomainError);
}

TEST_CASE("Boas series annihilates the x^{-c} mode exactly") {
  SignalFunction f;
  f.c = 1.0;
  f.weighted = [](double) { return cxdbl{1.0, 0.0}; };
  f.eval = [](double x) { return cxdbl{std::pow(x, -1.0), 0.0}; };
  for (double x : {0.5, 1.0, 3.0}) {
    const BoasResult r = boas_derivative(f, x, BoasConfig{1.0, 50, 1.0});
    CHECK(std::abs(r.value) == 0.0);
  }
}

TEST_CASE("Boas series recovers the derivative of pure modes") {
  // g_v(x) = i x^{-iv} has Theta_0 g_v(1) = v.
  const double v = 2.0, T = 1.0;
  SignalFunction g;
  g.c = 0.0;
  g.weighted = [v](double t) { return cxdbl{0.0, 1.0} * std::polar(1.0, -v * t); };
  g.eval = [w = g.weighted](double x) { return w(std::log(x)); };
  const BoasResult r = boas_derivative(g, 1.0, BoasConfig{T, 2000, 0.0});
  CHECK(std::abs(r.value - cxdbl{v, 0.0}) <= r.tail_bound);
}

TEST_CASE("Boas matches the spectral derivative on band-limited input") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}, {"T", 1.0}});
  const SpectralFunction dphi = derivative_spectral(e.phi, 1);
  const std::vector<double> xs{0.5, 1.0, 3.0};
  const auto spectral = mellin_inverse(dphi, 1.0, xs, -40.0, 40.0, 1.0 / 512.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const BoasResult r = boas_derivative(e.f, xs[i], BoasConfig{1.0, 5000, 1.0});
    CHECK(std::abs(r.value - spectral[i]) <= 1e-4);
  }
}

TEST_CASE("doubling K moves the Boas value by less than the tail bound") {
  const auto e = testlib::lookup("gauss_log");
  for (double x : {0.7, 1.3}) {
    const BoasResult a = boas_derivative(e.f, x, BoasConfig{2.0, 500, 1.0});
    const BoasResult b = boas_derivative(e.f, x, BoasConfig{2.0, 1000, 1.0});
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
  }
}

TEST_CASE("Boas range guard for signals without a log-axis form") {
  SignalFunction f;
  f.c = 1.0;
  f.eval = [](double x) { return cxdbl{std::pow(x, -1.0), 0.0}; };
  CHECK_THROWS_AS(boas_derivative(f, 1.0, BoasConfig{1.0, 5000, 1.0}), std::range_error);
}

TEST_CASE("boas_psi identities") {
  for (double T : {1.0, 2.0}) {
    const int K = 5000;
    for (int i = 0; i <= 20; ++i) {
      const double v = -kPi * T + 2.0 * kPi * T * i / 20.0;
      const BoasPsiResult p = boas_psi(v, T, K);
      CHECK(std::abs(p.value - v) <= p.tail_bound);
    }
    for (double frac : {0.3, 0.9}) {
      const double v = frac * kPi * T;
      const BoasPsiResult a = boas_psi(v + 2.0 * kPi * T, T, K);
      const BoasPsiResult b = boas_psi(v, T, K);
      CHECK(std::abs(a.value + b.value) <= a.tail_bound + b.tail_bound);
    }
    for (double frac : {1.5, 2.7}) {
      const double v = frac * kPi * T;
      const BoasPsiResult p = boas_psi(v, T, K);
      CHECK(std::abs(p.value - kPi * T * kernels::sawtooth_phi(v / (kPi * T))) <= p.tail_bound);
    }
  }
}

TEST_CASE("Boas remainder vanishes inside the band") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}});
  CHECK(std::abs(boas_remainder(e.phi, 1.3, 1.0, 1.0)) == 0.0);
}

TEST_CASE("Boas remainder satisfies the (|v| + pi T) bound") {
  const auto e = testlib::lookup("gauss_log");
  const double T = 1.0;
  const cxdbl r = boas_remainder(e.phi, 1.0, T, 1.0);
  // Oracle: trapezoid of (|v| + pi T)|phi(v)| over the tail.
  double bound = 0.0;
  const double h = 1e-3;
  for (double v = kPi * T; v <= 12.0; v += h) {
    bound += 2.0 * h * (v + kPi * T) * std::abs(e.phi(v));
  }
  bound /= 2.0 * kPi;
  CHECK(std::abs(r) <= bound);
  CHECK(std::abs(r) > 0.0);
}

TEST_CASE("Boas derivative + remainder reproduces the spectral derivative") {
  const auto e = testlib::lookup("gauss_log");
  const double T = 2.0, x = 1.0;
  const cxdbl theta = mellin_inverse(derivative_spectral(e.phi, 1), 1.0, {x}, -40.0, 40.0,
                                     1.0 / 128.0)[0];
  const BoasResult series = boas_derivative(e.f, x, BoasConfig{T, 2000, 1.0});
  const cxdbl remainder = boas_remainder(e.phi, x, T, 1.0);
  CHECK(std::abs((theta - series.value) - remainder) <= 1e-4);
}

TEST_CASE("odd reciprocal squares partial sums") {
  CHECK(odd_square_reciprocal_sum(1) == 2.0);
  CHECK(std::abs(odd_square_reciprocal_sum(1000000) - kPi * kPi / 4.0) <= 1e-6);
}

TEST_CASE("Bernstein inequality for band-limited entries in all three norms") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}});
  for (double T : {1.0, 2.0}) {
    for (double p : {1.0, 2.0, kInf}) {
      const double lhs = xnorm(testlib::theta_signal(e, 1), SpaceDescriptor{p, 1.0}, kGrid);
      const double rhs = kPi * T * xnorm(e.f, SpaceDescriptor{p, 1.0}, kGrid);
      CHECK(lhs <= rhs * (1.0 + 1e-8));
    }
  }
}
