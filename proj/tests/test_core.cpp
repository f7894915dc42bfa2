#include <doctest.h>

#include <cmath>

#include "mellin/core.hpp"
#include "mellin/kernels.hpp"
#include "mellin/testlib.hpp"

using namespace mellin;

namespace {

const LogUniformGrid kGrid = LogUniformGrid::over(-40.0, 40.0, 64.0);

SignalFunction indicator_signal(double c) {
  // f(x) = x^{-c} on [1, e]: the weighted profile is the unit indicator.
  SignalFunction f;
  f.c = c;
  f.weighted = [](double t) { return cxdbl{(t >= 0.0 && t <= 1.0) ? 1.0 : 0.0, 0.0}; };
  f.eval = [w = f.weighted, c](double x) { return std::pow(x, -c) * w(std::log(x)); };
  return f;
}

}  // namespace

TEST_CASE("xnorm p=1 of the indicator equals the interval length") {
  const LogUniformGrid fine = LogUniformGrid::over(-4.0, 6.0, 512.0);
  const SignalFunction f = indicator_signal(0.8);
  // Closed indicator endpoints cost one trapezoid cell each.
  CHECK(xnorm(f, SpaceDescriptor{1.0, 0.8}, fine) == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("xnorm p=inf of the sinc entries is 1") {
  const auto shifted = testlib::lookup("sinc_shifted", {{"T", 2.0}, {"c", 1.0}});
  CHECK(xnorm(shifted.f, SpaceDescriptor{kInf, 1.0}, kGrid) == doctest::Approx(1.0).epsilon(1e-12));
  const auto centered = testlib::lookup("sinc_centered", {{"T", 2.0}, {"c", 1.0}});
  CHECK(xnorm(centered.f, SpaceDescriptor{kInf, 1.0}, kGrid) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("xnorm p=2 of the log Gaussian is pi^(1/4)") {
  const auto e = testlib::lookup("gauss_log");
  CHECK(xnorm(e.f, SpaceDescriptor{2.0, 1.0}, kGrid) ==
        doctest::Approx(std::pow(kPi, 0.25)).epsilon(1e-10));
}

TEST_CASE("xnorm rejects unsupported p and non-finite evaluations") {
  const auto e = testlib::lookup("gauss_log");
  CHECK_THROWS_AS(xnorm(e.f, SpaceDescriptor{3.0, 1.0}, kGrid), UnsupportedSpaceError);
  SignalFunction bad;
  bad.c = 0.0;
  bad.weighted = [](double t) { return cxdbl{t == 0.0 ? kInf : 0.0, 0.0}; };
  bad.eval = [](double) { return cxdbl{0.0, 0.0}; };
  CHECK_THROWS_AS(xnorm(bad, SpaceDescriptor{1.0, 0.0}, kGrid), EvaluationError);
}

TEST_CASE("translate at h=1 is the identity") {
  const auto e = testlib::lookup("gauss_log");
  const SignalFunction g = translate(e.f, 1.0);
  for (double x : {0.3, 1.0, 2.7}) {
    CHECK(std::abs(g.eval(x) - e.f.eval(x)) <= 1e-15);
  }
}

TEST_CASE("translate preserves the X^1_c norm") {
  const auto e = testlib::lookup("gauss_log");
  const double before = xnorm(e.f, SpaceDescriptor{1.0, 1.0}, kGrid);
  const double after = xnorm(translate(e.f, 2.0), SpaceDescriptor{1.0, 1.0}, kGrid);
  CHECK(after == doctest::Approx(before).epsilon(1e-8));
}

TEST_CASE("x^{-c} is a fixed point of the translation") {
  SignalFunction f;
  f.c = 1.4;
  f.eval = [](double x) { return cxdbl{std::pow(x, -1.4), 0.0}; };
  const SignalFunction g = translate(f, 3.7);
  for (double x : {0.5, 1.0, 4.0}) {
    CHECK(g.eval(x).real() == doctest::Approx(std::pow(x, -1.4)).epsilon(1e-14));
  }
}

TEST_CASE("translation composes multiplicatively") {
  const auto e = testlib::lookup("gauss_log");
  const SignalFunction lhs = translate(translate(e.f, 1.5), 2.0);
  const SignalFunction rhs = translate(e.f, 3.0);
  for (double x : {0.4, 1.0, 2.2}) {
    CHECK(std::abs(lhs.eval(x) - rhs.eval(x)) <= 1e-14 * std::abs(rhs.eval(x)) + 1e-300);
  }
}

TEST_CASE("translate rejects non-positive h") {
  const auto e = testlib::lookup("gauss_log");
  CHECK_THROWS_AS(translate(e.f, 0.0), std::domain_error);
  CHECK_THROWS_AS(translate(e.f, -1.0), std::domain_error);
}

TEST_CASE("grid lattice is multiplicative") {
  const LogUniformGrid g(10.0, -50, 50);
  for (long k : {-20L, -3L, 0L, 7L}) {
    for (long j : {-5L, 1L, 12L}) {
      // Exact at the index level; one rounding in exp-space.
      CHECK(g.node(k) * g.node(j) ==
            doctest::Approx(g.node(k + j)).epsilon(4e-16));
      CHECK(g.log_node(k + j) ==
            doctest::Approx(g.log_node(k) + g.log_node(j)).epsilon(2e-16));
    }
  }
  CHECK(g.node(0) == 1.0);
  CHECK(g.step() == doctest::Approx(0.1).epsilon(1e-16));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(LogUniformGrid(0.0, -1, 1), std::domain_error);
  CHECK_THROWS_AS(LogUniformGrid(1.0, 5, 5), std::domain_error);
}

TEST_CASE("band limit must be positive") {
  CHECK_THROWS_AS(BandLimit(0.0), std::domain_error);
  CHECK(BandLimit(2.5).sigma == 2.5);
}

TEST_CASE("signal evaluation rejects non-positive x") {
  const auto e = testlib::lookup("gauss_log");
  CHECK_THROWS_AS(e.f(0.0), std::domain_error);
  CHECK_THROWS_AS(e.f(-1.0), std::domain_error);
}

TEST_CASE("property sweep: translation invariance and composition") {
  const auto e = testlib::lookup("gauss_log");
  const double n1 = xnorm(e.f, SpaceDescriptor{1.0, 1.0}, kGrid);
  unsigned long state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>((state >> 11) % 1000000) / 1000000.0;
  };
  for (int i = 0; i < 12; ++i) {
    const double h1 = std::exp(4.0 * next() - 2.0);
    const double h2 = std::exp(4.0 * next() - 2.0);
    const double x = std::exp(2.0 * next() - 1.0);
    CHECK(xnorm(translate(e.f, h1), SpaceDescriptor{1.0, 1.0}, kGrid) ==
          doctest::Approx(n1).epsilon(1e-8));
    const cxdbl lhs = translate(translate(e.f, h1), h2).eval(x);
    const cxdbl rhs = translate(e.f, h1 * h2).eval(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("spectral support is enforced by the wrapper") {
  SpectralFunction phi;
  phi.support = 2.0;
  phi.eval = [](double) { return cxdbl{1.0, 0.0}; };
  CHECK(phi(1.0) == cxdbl{1.0, 0.0});
  CHECK(phi(2.5) == cxdbl{0.0, 0.0});
  CHECK(phi(-7.0) == cxdbl{0.0, 0.0});
}
