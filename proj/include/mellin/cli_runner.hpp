#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mellin/core.hpp"

namespace mellin::cli {

// One resolved invocation: a subcommand plus every knob it may read.
// Flags override config-file values override these defaults.
struct RunConfig {
  std::string command;
  std::string entry = "gauss_log";
  double T = 2.0;
  double c = 1.0;
  double sigma0 = 2.0;
  int m = 2;
  double q = 1.0;
  int r = 1;
  int k = 0;
  int K = 5000;
  std::vector<double> sigmas;
  std::vector<double> Ts;
  std::vector<double> xs;
  long half_width = 300;
  double slope_tol = 0.05;
  std::string samples_csv;  // optional sample ingestion for `reconstruct`
  std::string out;          // empty -> stdout
  std::string format = "json";
};

// Executes one subcommand. Returns 0 on success, 1 when a numerical check
// fails or a numerical-domain error occurs, 2 on usage/config errors.
int run(const RunConfig& cfg);

// "1,2.5,4" -> {1, 2.5, 4}
std::vector<double> parse_double_list(const std::string& text);

// CSV with header `k,re,im`.
std::map<long, cxdbl> read_samples_csv(std::istream& in);

// Loads a JSON file whose keys mirror the command-line flags.
void apply_json_config(RunConfig& cfg, const std::string& path);

}  // namespace mellin::cli
