#pragma once

#include <map>
#include <string>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/transform.hpp"

namespace mellin::testlib {

// Where a recorded reference value comes from: a definition-level identity,
// a closed-form expression, or an independent numerical oracle.
enum class Provenance { exact, analytic, oracle };

struct AnalyticValue {
  double value = 0.0;
  Provenance source = Provenance::analytic;
};

// One catalog entry: a signal, its spectrum, class metadata, reference
// values, and the transform windows suited to its decay.
struct TestPair {
  std::string name;
  SignalFunction f;
  SpectralFunction phi;
  std::set<std::string> class_tags;
  std::map<std::string, AnalyticValue> analytic_values;
  TransformConfig roundtrip_cfg;
  double roundtrip_tol = 1e-8;
  bool slow_decay = false;
  // Closed-form weighted derivatives g, g', g'' (log-axis profiles of
  // f, Theta_c f, Theta^2_c f) where the entry provides them.
  std::vector<std::function<cxdbl(double)>> weighted_derivs;
};

// All entries at default parameters (T = 2, c = 1, sigma0 = 2, m = 2).
std::vector<TestPair> catalog();

// Parameterized instance; recognized params: "T", "c", "sigma0", "m".
// Unknown names raise NotFoundError.
TestPair lookup(const std::string& name, const std::map<std::string, double>& params = {});

// Lattice samples f(e^{k/T}) for k in [k_lo, k_hi], built through the
// weighted profile so extreme nodes cannot overflow.
std::map<long, cxdbl> lattice_samples(const TestPair& entry, double T, long k_lo, long k_hi);

// Signal whose weighted profile is the r-th derivative g^{(r)}, i.e.
// Theta^r_c f. Requires the entry to carry that closed form.
SignalFunction theta_signal(const TestPair& entry, int r);

// |Theta^r_c f|_{X^p_c}: p = 2 goes through Parseval on v^r phi(v); p = 1
// integrates |g^{(r)}| on the grid.
double theta_norm(const TestPair& entry, int r, int p, const LogUniformGrid& grid);

}  // namespace mellin::testlib
