#include "mellin/cli_runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mellin/calculus.hpp"
#include "mellin/distance.hpp"
#include "mellin/kernels.hpp"
#include "mellin/sampling.hpp"
#include "mellin/testlib.hpp"

namespace mellin::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::map<std::string, double> entry_params(const RunConfig& cfg) {
  return {{"T", cfg.T}, {"c", cfg.c}, {"sigma0", cfg.sigma0}, {"m", static_cast<double>(cfg.m)}};
}

json config_echo(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["entry"] = cfg.entry;
  j["T"] = cfg.T;
  j["c"] = cfg.c;
  j["sigma0"] = cfg.sigma0;
  j["m"] = cfg.m;
  j["q"] = cfg.q;
  j["r"] = cfg.r;
  j["k"] = cfg.k;
  j["K"] = cfg.K;
  j["sigmas"] = cfg.sigmas;
  j["Ts"] = cfg.Ts;
  j["xs"] = cfg.xs;
  j["half_width"] = cfg.half_width;
  j["slope_tol"] = cfg.slope_tol;
  j["format"] = cfg.format;
  return j;
}

void write_text(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary | std::ios::trunc);
  if (!os) throw InvalidParametersError("cannot open output path: " + cfg.out);
  os << text;
}

void write_report(const RunConfig& cfg, json results, json tolerances, bool pass) {
  json rep;
  rep["command"] = cfg.command;
  rep["config_echo"] = config_echo(cfg);
  rep["results"] = std::move(results);
  rep["tolerances"] = std::move(tolerances);
  rep["pass"] = pass;
  write_text(cfg, rep.dump(2) + "\n");
}

std::vector<double> default_xs() {
  std::vector<double> xs;
  for (int i = -4; i <= 4; ++i) xs.push_back(std::exp(0.5 * i));
  return xs;
}

// Minimal log-log SVG: one polyline per series plus axis labels.
std::string svg_loglog(const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
                       const std::string& x_label, const std::string& y_label) {
  constexpr double W = 640.0, H = 480.0, M = 60.0;
  double lx0 = kInf, lx1 = -kInf, ly0 = kInf, ly1 = -kInf;
  for (const auto& s : series) {
    for (const auto& p : s.second) {
      if (!(p.first > 0.0) || !(p.second > 0.0)) continue;
      lx0 = std::min(lx0, std::log10(p.first));
      lx1 = std::max(lx1, std::log10(p.first));
      ly0 = std::min(ly0, std::log10(p.second));
      ly1 = std::max(ly1, std::log10(p.second));
    }
  }
  if (!(lx1 > lx0)) lx1 = lx0 + 1.0;
  if (!(ly1 > ly0)) ly1 = ly0 + 1.0;
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << M << "' y1='" << H - M << "' x2='" << W - M << "' y2='" << H - M
     << "' stroke='black'/>\n";
  os << "<line x1='" << M << "' y1='" << M << "' x2='" << M << "' y2='" << H - M
     << "' stroke='black'/>\n";
  std::size_t ci = 0;
  for (const auto& s : series) {
    os << "<polyline fill='none' stroke='" << colors[ci % 4] << "' stroke-width='1.5' points='";
    for (const auto& p : s.second) {
      if (!(p.first > 0.0) || !(p.second > 0.0)) continue;
      const double px = M + (std::log10(p.first) - lx0) / (lx1 - lx0) * (W - 2 * M);
      const double py = H - M - (std::log10(p.second) - ly0) / (ly1 - ly0) * (H - 2 * M);
      os << fmt(px) << "," << fmt(py) << " ";
    }
    os << "'/>\n";
    os << "<text x='" << W - M + 4 << "' y='" << M + 16.0 * static_cast<double>(ci + 1)
       << "' font-size='12' fill='" << colors[ci % 4] << "'>" << s.first << "</text>\n";
    ++ci;
  }
  os << "<text x='" << W / 2 << "' y='" << H - 16 << "' font-size='13' text-anchor='middle'>"
     << x_label << " (log10)</text>\n";
  os << "<text x='16' y='" << H / 2 << "' font-size='13' transform='rotate(-90 16 " << H / 2
     << ")' text-anchor='middle'>" << y_label << " (log10)</text>\n";
  os << "</svg>\n";
  return os.str();
}

// OLS slope of log(dist) vs log(sigma) over the first n points; NaN when a
// distance is nonpositive.
double running_slope(const std::vector<std::pair<double, double>>& points, std::size_t n) {
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(points[i].second > 0.0)) return std::nan("");
    sx += std::log(points[i].first);
    sy += std::log(points[i].second);
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (std::log(points[i].first) - mx) * (std::log(points[i].second) - my);
    den += (std::log(points[i].first) - mx) * (std::log(points[i].first) - mx);
  }
  return den > 0.0 ? num / den : std::nan("");
}

TransformConfig support_clipped(const testlib::TestPair& e) {
  TransformConfig cfg = e.roundtrip_cfg;
  if (e.phi.support) {
    cfg.v_lo = -*e.phi.support;
    cfg.v_hi = *e.phi.support;
  }
  return cfg;
}

int run_transform(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const SpectralSamples s = mellin_forward(e.f, support_clipped(e));
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "v,re,im\n";
    for (std::size_t i = 0; i < s.v_grid.size(); ++i) {
      os << fmt(s.v_grid[i]) << "," << fmt(s.values[i].real()) << "," << fmt(s.values[i].imag())
         << "\n";
    }
    write_text(cfg, os.str());
    return 0;
  }
  json results = json::array();
  for (std::size_t i = 0; i < s.v_grid.size(); ++i) {
    results.push_back(
        {{"v", s.v_grid[i]}, {"re", s.values[i].real()}, {"im", s.values[i].imag()}});
  }
  write_report(cfg, results, json::object(), true);
  return 0;
}

int run_reconstruct(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const std::vector<double> xs = cfg.xs.empty() ? default_xs() : cfg.xs;
  std::map<long, cxdbl> external;
  bool have_external = false;
  if (!cfg.samples_csv.empty()) {
    std::ifstream is(cfg.samples_csv);
    if (!is) throw InvalidParametersError("cannot open samples csv: " + cfg.samples_csv);
    external = read_samples_csv(is);
    if (external.empty()) {
      throw InvalidParametersError("samples csv holds no rows: " + cfg.samples_csv);
    }
    have_external = true;
  }
  json results = json::array();
  bool pass = true;
  for (double x : xs) {
    ReconstructionReport rep;
    if (have_external) {
      SamplingConfig sc{cfg.T, cfg.c, external.begin()->first, external.rbegin()->first, 1e-3};
      rep = exp_sampling_reconstruct(external, x, sc);
      rep.remainder = e.f.eval(x) - rep.value;
      if (e.f.spectrum) {
        rep.certified_bound = std::pow(x, -cfg.c) * exp_sampling_bound(*e.f.spectrum, cfg.T);
      }
    } else {
      rep = exp_sampling_report(e.f, x, SamplingConfig::centered(cfg.T, cfg.c, x, cfg.half_width));
    }
    json row;
    row["x"] = x;
    row["value_re"] = rep.value.real();
    row["value_im"] = rep.value.imag();
    row["remainder_re"] = rep.remainder->real();
    row["remainder_im"] = rep.remainder->imag();
    row["certified_bound"] = rep.certified_bound;
    row["truncation_estimate"] = rep.truncation_estimate;
    const bool ok =
        std::abs(*rep.remainder) <= rep.certified_bound + rep.truncation_estimate + 1e-9;
    row["within_bound"] = ok;
    pass = pass && ok;
    results.push_back(row);
  }
  write_report(cfg, results, json{{"bound_slack", 1e-9}}, pass);
  return pass ? 0 : 1;
}

int run_kernel_apply(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const std::vector<double> xs = cfg.xs.empty() ? default_xs() : cfg.xs;
  json results = json::array();
  bool pass = true;
  for (double x : xs) {
    const KernelApplyResult a = reproducing_kernel_apply(e.f, x, cfg.T, cfg.c);
    const KernelRemainderResult r = reproducing_kernel_remainder(e.phi, x, cfg.T, cfg.c);
    const cxdbl fx = e.f.eval(x);
    const double mismatch = std::abs(fx - a.value - r.value);
    json row;
    row["x"] = x;
    row["value_re"] = a.value.real();
    row["value_im"] = a.value.imag();
    row["tail_estimate"] = a.tail_estimate;
    row["remainder_re"] = r.value.real();
    row["remainder_im"] = r.value.imag();
    row["certified_bound"] = r.certified_bound;
    row["identity_mismatch"] = mismatch;
    const bool ok = mismatch <= 1e-3 + a.tail_estimate &&
                    std::abs(r.value) <= r.certified_bound + 1e-9;
    row["within_bound"] = ok;
    pass = pass && ok;
    results.push_back(row);
  }
  write_report(cfg, results, json{{"identity_tol", 1e-3}}, pass);
  return pass ? 0 : 1;
}

int run_differentiate(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const std::vector<double> xs = cfg.xs.empty() ? default_xs() : cfg.xs;
  const SpectralFunction theta_phi = derivative_spectral(e.phi, 1);
  const double vs = e.phi.support ? 1.0 / 512.0 : 1.0 / 128.0;
  const std::vector<cxdbl> spectral =
      mellin_inverse(theta_phi, cfg.c, xs, -40.0, 40.0, vs);
  json results = json::array();
  std::ostringstream os;
  os << "x,boas_re,boas_im,spectral_re,spectral_im,abs_diff,tail_bound\n";
  bool pass = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const BoasResult b = boas_derivative(e.f, xs[i], BoasConfig{cfg.T, cfg.K, cfg.c});
    const double diff = std::abs(b.value - spectral[i]);
    const bool ok = diff <= 1e-3 + b.tail_bound;
    pass = pass && ok;
    os << fmt(xs[i]) << "," << fmt(b.value.real()) << "," << fmt(b.value.imag()) << ","
       << fmt(spectral[i].real()) << "," << fmt(spectral[i].imag()) << "," << fmt(diff) << ","
       << fmt(b.tail_bound) << "\n";
    results.push_back({{"x", xs[i]},
                       {"boas_re", b.value.real()},
                       {"boas_im", b.value.imag()},
                       {"spectral_re", spectral[i].real()},
                       {"spectral_im", spectral[i].imag()},
                       {"abs_diff", diff},
                       {"tail_bound", b.tail_bound},
                       {"within_tol", ok}});
  }
  if (cfg.format == "csv") {
    write_text(cfg, os.str());
  } else {
    write_report(cfg, results, json{{"diff_tol", 1e-3}}, pass);
  }
  return pass ? 0 : 1;
}

int run_distance(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const std::vector<double> sigmas = cfg.sigmas.empty() ? std::vector<double>{2, 4, 8, 16} : cfg.sigmas;
  const LogUniformGrid grid = LogUniformGrid::over(-40.0, 40.0, 64.0);
  const double theta = testlib::theta_norm(e, cfg.r, 2, grid);
  std::vector<std::pair<double, double>> points;
  json results = json::array();
  std::ostringstream os;
  os << "sigma,dist,bound,slope_running\n";
  bool pass = true;
  std::vector<std::pair<double, double>> dist_series, bound_series;
  for (double sigma : sigmas) {
    const double d = dist_q(e.phi, DistanceQuery{sigma, cfg.q, cfg.k});
    const BoundReport b = sobolev_bound(theta, cfg.r, sigma, cfg.q, 2, 0);
    points.emplace_back(sigma, d);
    dist_series.emplace_back(sigma, d);
    bound_series.emplace_back(sigma, b.bound_value);
    std::string slope_str;
    double slope = std::nan("");
    if (points.size() >= 2) {
      slope = running_slope(points, points.size());
      if (!std::isnan(slope)) slope_str = fmt(slope);
    }
    const bool ok = d <= b.bound_value * (1.0 + 1e-9) + 1e-12;
    pass = pass && ok;
    os << fmt(sigma) << "," << fmt(d) << "," << fmt(b.bound_value) << "," << slope_str << "\n";
    json row = {{"sigma", sigma}, {"dist", d}, {"bound", b.bound_value}, {"within_bound", ok}};
    if (!slope_str.empty()) row["slope_running"] = slope;
    results.push_back(row);
  }
  if (cfg.format == "csv") {
    write_text(cfg, os.str());
  } else if (cfg.format == "svg") {
    write_text(cfg, svg_loglog({{"dist", dist_series}, {"bound", bound_series}}, "sigma", "dist"));
  } else {
    write_report(cfg, results, json{{"domination_slack", 1e-9}}, pass);
  }
  return pass ? 0 : 1;
}

int run_rates(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  if (e.analytic_values.find("tail_slope_q1") == e.analytic_values.end()) {
    throw InvalidParametersError("rates: entry has no theoretical tail exponent");
  }
  const std::vector<double> sigmas = cfg.sigmas.empty() ? std::vector<double>{4, 8, 16, 32} : cfg.sigmas;
  const double expected = (cfg.k - 2.0 * cfg.m) + 1.0 / cfg.q;
  std::vector<std::pair<double, double>> points;
  for (double sigma : sigmas) {
    points.emplace_back(sigma, dist_q(e.phi, DistanceQuery{sigma, cfg.q, cfg.k}));
  }
  const double slope = rate_fit(points);
  const double rel_err = std::abs(slope - expected) / std::abs(expected);
  const bool pass = rel_err <= cfg.slope_tol;
  if (cfg.format == "svg") {
    write_text(cfg, svg_loglog({{"dist", points}}, "sigma", "dist"));
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "sigma,dist,bound,slope_running\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      os << fmt(points[i].first) << "," << fmt(points[i].second) << ",,"
         << (i >= 1 ? fmt(running_slope(points, i + 1)) : std::string()) << "\n";
    }
    write_text(cfg, os.str());
  } else {
    json results = json::array();
    for (const auto& p : points) results.push_back({{"sigma", p.first}, {"dist", p.second}});
    json summary = {{"slope", slope}, {"expected", expected}, {"rel_err", rel_err}};
    results.push_back(summary);
    write_report(cfg, results, json{{"slope_tol", cfg.slope_tol}}, pass);
  }
  return pass ? 0 : 1;
}

int run_verify_sharpness(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const double sigma = kPi * cfg.T;
  json results = json::array();
  bool pass = true;
  if (cfg.entry == "sinc_shifted") {
    const double d1 = dist_q(e.phi, DistanceQuery{sigma, 1.0, 0});
    pass = pass && std::abs(d1 - kPi) <= 1e-6;
    const auto samples = testlib::lattice_samples(e, cfg.T, -100, 100);
    double sample_sup = 0.0;
    for (const auto& [k, s] : samples) sample_sup = std::max(sample_sup, std::abs(s));
    pass = pass && sample_sup == 0.0;
    // All samples vanish, so the remainder is f itself; measure its sup norm.
    SignalFunction remainder;
    remainder.c = cfg.c;
    remainder.weighted = [&e, &samples, T = cfg.T, c = cfg.c](double t) {
      cxdbl acc = e.f.weighted_at(t);
      for (const auto& [k, s] : samples) {
        if (s == cxdbl{0.0, 0.0}) continue;
        acc -= std::exp(c * static_cast<double>(k) / T) * s *
               kernels::sinc(T * t - static_cast<double>(k));
      }
      return acc;
    };
    remainder.eval = [w = remainder.weighted, c = cfg.c](double x) {
      return std::pow(x, -c) * w(std::log(x));
    };
    const double sup =
        xnorm(remainder, SpaceDescriptor{kInf, cfg.c}, LogUniformGrid::over(-6.0, 6.0, 64.0));
    pass = pass && std::abs(sup - 1.0) <= 1e-3;
    results.push_back({{"dist1", d1},
                       {"dist1_expected", kPi},
                       {"lattice_sample_sup", sample_sup},
                       {"remainder_sup", sup},
                       {"remainder_sup_expected", 1.0}});
  } else if (cfg.entry == "sinc_centered") {
    const double d1 = dist_q(e.phi, DistanceQuery{sigma, 1.0, 0});
    pass = pass && std::abs(d1 - kPi) <= 1e-6;
    SignalFunction remainder;
    remainder.c = cfg.c;
    remainder.weighted = [&e, T = cfg.T, c = cfg.c](double t) {
      const KernelApplyResult a = reproducing_kernel_apply(e.f, std::exp(t), T, c);
      return e.f.weighted_at(t) - std::exp(c * t) * a.value;
    };
    remainder.eval = [w = remainder.weighted, c = cfg.c](double x) {
      return std::pow(x, -c) * w(std::log(x));
    };
    const double sup =
        xnorm(remainder, SpaceDescriptor{kInf, cfg.c}, LogUniformGrid::over(-6.0, 6.0, 16.0));
    pass = pass && std::abs(sup - 0.5) <= 1e-3;
    results.push_back({{"dist1", d1},
                       {"dist1_expected", kPi},
                       {"kernel_remainder_sup", sup},
                       {"kernel_remainder_sup_expected", 0.5}});
  } else {
    throw InvalidParametersError("verify-sharpness: entry must be sinc_shifted or sinc_centered");
  }
  write_report(cfg, results, json{{"dist_tol", 1e-6}, {"sup_tol", 1e-3}}, pass);
  return pass ? 0 : 1;
}

int run_verify_bernstein(const RunConfig& cfg) {
  const testlib::TestPair e = testlib::lookup(cfg.entry, entry_params(cfg));
  const std::vector<double> Ts = cfg.Ts.empty() ? std::vector<double>{0.5, 1.0, 2.0} : cfg.Ts;
  const LogUniformGrid grid = LogUniformGrid::over(-40.0, 40.0, 64.0);
  json results = json::array();
  bool pass = true;
  for (double T : Ts) {
    if (e.phi.support && *e.phi.support <= kPi * T) {
      const double lhs = testlib::theta_norm(e, 1, 2, grid);
      const double rhs = kPi * T * xnorm(e.f, SpaceDescriptor{2.0, cfg.c}, grid);
      const bool ok = lhs <= rhs * (1.0 + 1e-8);
      pass = pass && ok;
      results.push_back(
          {{"T", T}, {"kind", "band_limited"}, {"lhs", lhs}, {"rhs", rhs}, {"satisfied", ok}});
    }
    const BernsteinCheck ext = bernstein_extended_check(e.f, T, grid);
    pass = pass && ext.satisfied;
    results.push_back({{"T", T},
                       {"kind", "extended"},
                       {"lhs", ext.lhs},
                       {"rhs", ext.rhs},
                       {"satisfied", ext.satisfied}});
  }
  write_report(cfg, results, json{{"rel_slack", 1e-8}}, pass);
  return pass ? 0 : 1;
}

int run_list_catalog(const RunConfig& cfg) {
  json results = json::array();
  for (const auto& e : testlib::catalog()) {
    json row;
    row["name"] = e.name;
    row["c"] = e.f.c;
    row["slow_decay"] = e.slow_decay;
    row["band_limit"] = e.phi.support ? json(*e.phi.support) : json(nullptr);
    row["class_tags"] = std::vector<std::string>(e.class_tags.begin(), e.class_tags.end());
    json vals;
    for (const auto& [k, v] : e.analytic_values) {
      const char* src = v.source == testlib::Provenance::exact
                            ? "exact"
                            : (v.source == testlib::Provenance::analytic ? "analytic" : "oracle");
      vals[k] = {{"value", v.value}, {"source", src}};
    }
    row["analytic_values"] = vals;
    results.push_back(row);
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "name,c,slow_decay,band_limit,class_tags\n";
    for (const auto& row : results) {
      os << row["name"].get<std::string>() << "," << fmt(row["c"].get<double>()) << ","
         << (row["slow_decay"].get<bool>() ? 1 : 0) << ","
         << (row["band_limit"].is_null() ? std::string() : fmt(row["band_limit"].get<double>()))
         << ",";
      const auto tags = row["class_tags"].get<std::vector<std::string>>();
      for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? ";" : "") << tags[i];
      os << "\n";
    }
    write_text(cfg, os.str());
  } else {
    write_report(cfg, results, json::object(), true);
  }
  return 0;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

std::map<long, cxdbl> read_samples_csv(std::istream& in) {
  std::map<long, cxdbl> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("k,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    std::stringstream ss(line);
    std::string kf, ref, imf;
    if (!std::getline(ss, kf, ',') || !std::getline(ss, ref, ',')) continue;
    std::getline(ss, imf, ',');
    out[std::stol(kf)] = cxdbl{std::stod(ref), imf.empty() ? 0.0 : std::stod(imf)};
  }
  return out;
}

void apply_json_config(RunConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidParametersError("cannot open config file: " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& ex) {
    throw InvalidParametersError(std::string("config file is not valid JSON: ") + ex.what());
  }
  if (j.contains("command")) cfg.command = j["command"].get<std::string>();
  if (j.contains("entry")) cfg.entry = j["entry"].get<std::string>();
  if (j.contains("T")) cfg.T = j["T"].get<double>();
  if (j.contains("c")) cfg.c = j["c"].get<double>();
  if (j.contains("sigma0")) cfg.sigma0 = j["sigma0"].get<double>();
  if (j.contains("m")) cfg.m = j["m"].get<int>();
  if (j.contains("q")) cfg.q = j["q"].get<double>();
  if (j.contains("r")) cfg.r = j["r"].get<int>();
  if (j.contains("k")) cfg.k = j["k"].get<int>();
  if (j.contains("K")) cfg.K = j["K"].get<int>();
  if (j.contains("sigmas")) cfg.sigmas = j["sigmas"].get<std::vector<double>>();
  if (j.contains("Ts")) cfg.Ts = j["Ts"].get<std::vector<double>>();
  if (j.contains("xs")) cfg.xs = j["xs"].get<std::vector<double>>();
  if (j.contains("half_width")) cfg.half_width = j["half_width"].get<long>();
  if (j.contains("slope_tol")) cfg.slope_tol = j["slope_tol"].get<double>();
  if (j.contains("samples_csv")) cfg.samples_csv = j["samples_csv"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

int run(const RunConfig& cfg) {
  try {
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "svg") {
      throw InvalidParametersError("format must be csv, json or svg");
    }
    if (cfg.command == "transform") return run_transform(cfg);
    if (cfg.command == "reconstruct") return run_reconstruct(cfg);
    if (cfg.command == "kernel-apply") return run_kernel_apply(cfg);
    if (cfg.command == "differentiate") return run_differentiate(cfg);
    if (cfg.command == "distance") return run_distance(cfg);
    if (cfg.command == "rates") return run_rates(cfg);
    if (cfg.command == "verify-sharpness") return run_verify_sharpness(cfg);
    if (cfg.command == "verify-bernstein") return run_verify_bernstein(cfg);
    if (cfg.command == "list-catalog") return run_list_catalog(cfg);
    std::cerr << "unknown command: " << cfg.command << "\n";
    return 2;
  } catch (const NotFoundError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "numerical failure: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace mellin::cli
