// mellin-kit: exponential sampling, Mellin differentiation and band-limited
// distance experiments from the built-in signal catalog.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mellin/cli_runner.hpp"

namespace {

struct RawLists {
  std::string sigmas;
  std::string Ts;
  std::string xs;
};

void add_common(CLI::App* sub, mellin::cli::RunConfig& cfg, RawLists& raw) {
  sub->add_option("--entry", cfg.entry, "catalog entry name");
  sub->add_option("--T", cfg.T, "lattice/bandwidth parameter T");
  sub->add_option("--c", cfg.c, "Mellin exponent c");
  sub->add_option("--sigma0", cfg.sigma0, "bump band limit");
  sub->add_option("--m", cfg.m, "Sobolev family order");
  sub->add_option("--q", cfg.q, "distance integrability index q");
  sub->add_option("--r", cfg.r, "derivative / difference order r");
  sub->add_option("--k", cfg.k, "spectral derivative order k");
  sub->add_option("--K", cfg.K, "Boas series truncation");
  sub->add_option("--sigmas", raw.sigmas, "comma-separated sigma sweep");
  sub->add_option("--Ts", raw.Ts, "comma-separated T sweep");
  sub->add_option("--xs", raw.xs, "comma-separated probe points");
  sub->add_option("--half-width", cfg.half_width, "sampling series half width");
  sub->add_option("--slope-tol", cfg.slope_tol, "relative slope tolerance");
  sub->add_option("--samples", cfg.samples_csv, "CSV sample map (k,re,im)");
  sub->add_option("--out", cfg.out, "output path (default stdout)");
  sub->add_option("--format", cfg.format, "csv|json|svg");
  // --config is consumed before parsing; listed here for --help only.
  std::string ignored;
  sub->add_option("--config", ignored, "JSON config file mirroring these flags");
}

}  // namespace

int main(int argc, char** argv) {
  mellin::cli::RunConfig cfg;

  // Config file first, flags on top (flags > config > defaults).
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        mellin::cli::apply_json_config(cfg, argv[i + 1]);
      } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{"Mellin band-limited analysis toolkit"};
  app.require_subcommand(0, 1);
  RawLists raw;
  const std::vector<std::string> commands = {
      "transform",       "reconstruct", "kernel-apply",     "differentiate", "distance",
      "rates",           "verify-sharpness", "verify-bernstein", "list-catalog"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, cfg, raw);
    sub->callback([&cfg, name]() { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  if (cfg.command.empty()) {
    std::cerr << app.help();
    return 2;
  }
  try {
    if (!raw.sigmas.empty()) cfg.sigmas = mellin::cli::parse_double_list(raw.sigmas);
    if (!raw.Ts.empty()) cfg.Ts = mellin::cli::parse_double_list(raw.Ts);
    if (!raw.xs.empty()) cfg.xs = mellin::cli::parse_double_list(raw.xs);
  } catch (const std::exception& ex) {
    std::cerr << "error: malformed numeric list: " << ex.what() << "\n";
    return 2;
  }
  return mellin::cli::run(cfg);
}
