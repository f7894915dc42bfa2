#include <doctest.h>

#include <cmath>

#include "mellin/sampling.hpp"
#include "mellin/testlib.hpp"

using namespace mellin;

TEST_CASE("band-limited reconstruction from lattice samples") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}, {"T", 1.0}});
  const auto samples = testlib::lattice_samples(e, 1.0, -300, 300);
  for (double x : {0.5, 1.0, std::exp(1.0)}) {
    const auto rep =
        exp_sampling_reconstruct(samples, x, SamplingConfig{1.0, 1.0, -300, 300});
    CHECK(std::abs(rep.value - e.f.eval(x)) <= 1e-3);
  }
}

TEST_CASE("the shifted sinc has all-zero samples and remainder f") {
  const auto e = testlib::lookup("sinc_shifted", {{"T", 2.0}});
  const auto samples = testlib::lattice_samples(e, 2.0, -300, 300);
  for (const auto& [k, s] : samples) CHECK(std::abs(s) == 0.0);
  for (double x : {0.7, 1.0, 1.9}) {
    const auto rep = exp_sampling_report(e.f, x, SamplingConfig{2.0, 1.0, -300, 300});
    CHECK(std::abs(rep.value) == 0.0);
    CHECK(std::abs(*rep.remainder - e.f.eval(x)) == 0.0);
    CHECK(rep.truncation_estimate == 0.0);
  }
}

TEST_CASE("reconstruction interpolates at the lattice nodes") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}, {"T", 1.0}});
  const auto samples = testlib::lattice_samples(e, 1.0, -200, 200);
  for (long j : {-2L, 0L, 3L}) {
    const double x = std::exp(static_cast<double>(j) / 1.0);
    const auto rep = exp_sampling_reconstruct(samples, x, SamplingConfig{1.0, 1.0, -200, 200});
    // sinc(j - k) is an exact Kronecker delta, so only sample j contributes.
    CHECK(std::abs(rep.value - samples.at(j)) <= 1e-15 * std::abs(samples.at(j)) + 1e-300);
  }
}

TEST_CASE("missing samples are rejected") {
  const auto e = testlib::lookup("bump_bl");
  auto samples = testlib::lattice_samples(e, 1.0, -10, 10);
  samples.erase(3);
  CHECK_THROWS_AS(exp_sampling_reconstruct(samples, 1.0, SamplingConfig{1.0, 1.0, -10, 10}),
                  IncompleteDataError);
}

TEST_CASE("sampling bound is sharp for the shifted sinc") {
  const auto e = testlib::lookup("sinc_shifted", {{"T", 2.0}});
  CHECK(exp_sampling_bound(e.phi, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampling bound vanishes inside the band") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}});
  CHECK(exp_sampling_bound(e.phi, 1.0) == 0.0);
}

TEST_CASE("sampling bound for the log Gaussian against the erfc oracle") {
  const auto e = testlib::lookup("gauss_log");
  const double expected = 2.0 * std::erfc(kPi / std::sqrt(2.0));
  CHECK(exp_sampling_bound(e.phi, 1.0) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("reproducing kernel reproduces band-limited signals") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}});
  for (double x : {0.5, 1.0, 2.0}) {
    const KernelApplyResult a = reproducing_kernel_apply(e.f, x, 1.0, 1.0);
    CHECK(std::abs(a.value - e.f.eval(x)) <= 1e-3);
  }
}

TEST_CASE("reproducing kernel halves the centered sinc at x=1") {
  const auto e = testlib::lookup("sinc_centered", {{"T", 2.0}});
  const KernelApplyResult a = reproducing_kernel_apply(e.f, 1.0, 2.0, 1.0);
  CHECK(std::abs(a.value - cxdbl{0.5, 0.0}) <= 1e-3);
  CHECK(std::abs(e.f.eval(1.0) - a.value - cxdbl{0.5, 0.0}) <= 1e-3);
}

TEST_CASE("reproducing kernel of the zero signal is zero") {
  SignalFunction zero;
  zero.c = 1.0;
  zero.weighted = [](double) { return cxdbl{0.0, 0.0}; };
  zero.eval = [](double) { return cxdbl{0.0, 0.0}; };
  const KernelApplyResult a = reproducing_kernel_apply(zero, 1.3, 2.0, 1.0);
  CHECK(std::abs(a.value) == 0.0);
  CHECK(a.tail_estimate == 0.0);
}

TEST_CASE("reproducing kernel rejects windows below tolerance") {
  const auto e = testlib::lookup("gauss_log");
  KernelQuadConfig cfg;
  cfg.window = 0.5;
  CHECK_THROWS_AS(reproducing_kernel_apply(e.f, 1.0, 2.0, 1.0, cfg), WindowTooSmallError);
}

TEST_CASE("kernel remainder of the centered rectangle is 1/2 at x=1") {
  const auto e = testlib::lookup("sinc_centered", {{"T", 2.0}});
  const KernelRemainderResult r = reproducing_kernel_remainder(e.phi, 1.0, 2.0, 1.0);
  CHECK(std::abs(r.value - cxdbl{0.5, 0.0}) <= 1e-9);
  CHECK(r.certified_bound == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("kernel remainder vanishes inside the band") {
  const auto e = testlib::lookup("bump_bl", {{"sigma0", 2.0}});
  const KernelRemainderResult r = reproducing_kernel_remainder(e.phi, 1.7, 1.0, 1.0);
  CHECK(std::abs(r.value) == 0.0);
}

TEST_CASE("kernel remainder of the log Gaussian against the erfc oracle") {
  const auto e = testlib::lookup("gauss_log");
  const KernelRemainderResult r = reproducing_kernel_remainder(e.phi, 1.0, 1.0, 1.0);
  CHECK(std::abs(r.value - cxdbl{std::erfc(kPi / std::sqrt(2.0)), 0.0}) <= 1e-9);
}

TEST_CASE("remainder identity f = apply + remainder") {
  const auto e = testlib::lookup("gauss_log");
  for (double x : {0.6, 1.0, 1.8}) {
    const KernelApplyResult a = reproducing_kernel_apply(e.f, x, 1.0, 1.0);
    const KernelRemainderResult r = reproducing_kernel_remainder(e.phi, x, 1.0, 1.0);
    CHECK(std::abs(e.f.eval(x) - a.value - r.value) <= 1e-3 + a.tail_estimate);
    CHECK(std::abs(r.value) <= r.certified_bound + 1e-12);
  }
}

TEST_CASE("sampling remainder consistency across the catalog") {
  for (const char* name : {"gauss_log", "bump_bl"}) {
    const auto e = testlib::lookup(name);
    const double T = 1.0;
    for (int i = 0; i < 10; ++i) {
      const double x = std::exp(-1.5 + i * (3.0 / 9.0));
      const auto rep = exp_sampling_report(e.f, x, SamplingConfig{T, 1.0, -300, 300});
      CHECK(std::abs(*rep.remainder) <=
            rep.certified_bound + rep.truncation_estimate + 1e-9);
    }
  }
}

TEST_CASE("centered config tracks the probe point") {
  const SamplingConfig cfg = SamplingConfig::centered(2.0, 1.0, std::exp(3.0), 50);
  CHECK(cfg.k_lo == 6 - 50);
  CHECK(cfg.k_hi == 6 + 50);
}
