// rieszlab command-line driver. Every computation goes through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rieszlab/rieszlab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::optional<double> p;
  std::optional<int> n;
  std::string id;
  int grid_r = 0;
  int grid_t = 0;
  std::optional<int> samples;
  int degree = 8;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string format = "human";
  std::string input;
  std::string output;
  std::vector<double> gamma_frac{0.5, 0.9, 0.99};
  std::string relaxed;
};

/// Failure reported by the library, carrying the process exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

/// Owns a char* allocated by the library.
struct LibString {
  char* text = nullptr;
  ~LibString() { rl_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

struct MapHandle {
  rl_map* map = nullptr;
  ~MapHandle() { rl_map_free(map); }
};

struct ReportHandle {
  rl_report* report = nullptr;
  ~ReportHandle() { rl_report_free(report); }
};

void check(rl_status status) {
  if (status == RL_OK) return;
  const bool usage = status == RL_INVALID_ARGUMENT || status == RL_DOMAIN || status == RL_PARSE ||
                     status == RL_HYPOTHESIS;
  throw CommandError{usage ? kExitUsage : kExitFail, rl_last_error()};
}

rl_format format_of(const RunConfig& cfg) {
  if (cfg.format == "json") return RL_FORMAT_JSON;
  if (cfg.format == "csv") return RL_FORMAT_CSV;
  return RL_FORMAT_HUMAN;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.back() != '\n') body += '\n';
  if (cfg.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw CommandError{kExitUsage, "cannot open output file '" + cfg.output + "'"};
  out << body;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitUsage, "cannot open input file '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

double require_p(const RunConfig& cfg) {
  if (!cfg.p) throw CommandError{kExitUsage, "--p is required"};
  return *cfg.p;
}

/// The map from --input, or a random map of --degree drawn with --seed.
MapHandle load_map(const RunConfig& cfg) {
  MapHandle handle;
  if (!cfg.input.empty())
    check(rl_map_from_json(read_file(cfg.input).c_str(), &handle.map));
  else
    check(rl_map_random(cfg.degree, cfg.seed, nullptr, &handle.map));
  return handle;
}

/// Prints the report; on failure also prints the human form (with the
/// violating parameters) to stderr when stdout carries a machine format.
int emit_report(const RunConfig& cfg, const ReportHandle& handle) {
  check(rl_report_set_seed(handle.report, cfg.seed));
  LibString text;
  check(rl_report_format(handle.report, format_of(cfg), &text.text));
  write_output(cfg, text.str());
  if (rl_report_passed(handle.report)) return kExitPass;
  if (cfg.format != "human" || !cfg.output.empty()) {
    LibString human;
    check(rl_report_format(handle.report, RL_FORMAT_HUMAN, &human.text));
    std::cerr << human.str();
  }
  return kExitFail;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int run_constants(const RunConfig& cfg) {
  if (!cfg.p && !cfg.n) throw CommandError{kExitUsage, "--p or --n is required"};
  const double x = cfg.p ? *cfg.p : static_cast<double>(*cfg.n);
  LibString raw;
  check(rl_constants_json(x, &raw.text));
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(raw.str());
  if (cfg.n && cfg.p) {
    double isop = 0.0;
    check(rl_sharp_constant("ISOP", *cfg.n, &isop));
    doc["constants"]["ISOP"] = isop;
  }
  if (doc["constants"].empty()) throw CommandError{kExitUsage, "no constant is defined at this exponent"};

  nlohmann::ordered_json out;
  out["id"] = "CONSTANTS";
  out["p"] = x;
  out["constants"] = doc["constants"];
  out["seed"] = cfg.seed;
  if (cfg.format == "json") {
    write_output(cfg, out.dump(2));
  } else if (cfg.format == "csv") {
    std::string text = "name,value\n";
    for (const auto& [name, value] : out["constants"].items()) text += name + "," + value.dump() + "\n";
    write_output(cfg, text);
  } else {
    std::string text = "constants at p = " + out["p"].dump() + " (seed " + std::to_string(cfg.seed) + ")\n";
    for (const auto& [name, value] : out["constants"].items())
      text += "  " + name + std::string(name.size() < 14 ? 14 - name.size() : 1, ' ') + "= " +
              fixed6(value.get<double>()) + "\n";
    write_output(cfg, text);
  }
  return kExitPass;
}

int run_norms(const RunConfig& cfg) {
  const double p = require_p(cfg);
  MapHandle map = load_map(cfg);
  const std::pair<const char*, rl_norm_kind> kinds[] = {{"hardy", RL_NORM_HARDY},
                                                       {"triple", RL_NORM_TRIPLE},
                                                       {"bergman", RL_NORM_BERGMAN},
                                                       {"bergman_triple", RL_NORM_BERGMAN_TRIPLE}};
  nlohmann::ordered_json out;
  out["id"] = "NORMS";
  out["p"] = p;
  out["source"] = cfg.input.empty() ? "random" : "file";
  nlohmann::ordered_json values;
  for (const auto& [name, kind] : kinds) {
    double v = 0.0;
    check(rl_norm(map.map, kind, p, cfg.grid_t, cfg.grid_r, &v));
    values[name] = v;
  }
  out["norms"] = values;
  out["seed"] = cfg.seed;
  if (cfg.format == "json") {
    write_output(cfg, out.dump(2));
  } else if (cfg.format == "csv") {
    std::string text = "norm,p,value,seed\n";
    for (const auto& [name, value] : values.items())
      text += name + "," + out["p"].dump() + "," + value.dump() + "," + std::to_string(cfg.seed) + "\n";
    write_output(cfg, text);
  } else {
    std::string text = "norms at p = " + out["p"].dump() + " (" + out["source"].get<std::string>() + " map, seed " +
                       std::to_string(cfg.seed) + ")\n";
    for (const auto& [name, value] : values.items()) text += "  " + name + " = " + value.dump() + "\n";
    write_output(cfg, text);
  }
  return kExitPass;
}

int run_hilbert(const RunConfig& cfg) {
  MapHandle map = load_map(cfg);
  MapHandle conj;
  check(rl_map_conjugate(map.map, &conj.map));
  LibString raw;
  check(rl_map_to_json(conj.map, 1, &raw.text));
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(raw.str());
  doc["seed"] = cfg.seed;
  if (cfg.format == "csv") {
    std::string text = "k,re,im\n";
    for (const auto& c : doc["series"]) text += c[0].dump() + "," + c[1].dump() + "," + c[2].dump() + "\n";
    write_output(cfg, text);
  } else if (cfg.format == "human" && cfg.output.empty()) {
    std::string text = "conjugate boundary series (seed " + std::to_string(cfg.seed) + ")\n";
    for (const auto& c : doc["series"])
      text += "  k=" + c[0].dump() + "  " + c[1].dump() + " " + c[2].dump() + "i\n";
    write_output(cfg, text);
  } else {
    write_output(cfg, doc.dump(2));
  }
  return kExitPass;
}

int run_verify_lemma(const RunConfig& cfg) {
  const bool angle_only = cfg.id.rfind("CONTI_", 0) == 0;
  const double p = cfg.p ? *cfg.p : (angle_only ? 2.0 : require_p(cfg));
  rl_grid grid{};
  grid.n_r = cfg.grid_r;
  grid.n_t = cfg.grid_t;
  grid.n_1d = cfg.grid_t;
  grid.tolerance = cfg.tol;
  ReportHandle report;
  check(rl_verify_lemma(cfg.id.c_str(), p, &grid, &report.report));
  return emit_report(cfg, report);
}

int run_subharmonic(const RunConfig& cfg) {
  const double p = require_p(cfg);
  const int count = cfg.samples.value_or(64);
  ReportHandle report;
  if (cfg.id == "F_CAL" || cfg.id == "G_CAL") {
    check(rl_check_pluri_lines(cfg.id.c_str(), p, count, cfg.grid_t ? cfg.grid_t : 512, cfg.seed, cfg.tol,
                               &report.report));
  } else {
    check(rl_check_submean(cfg.id.c_str(), p, count, cfg.grid_r ? cfg.grid_r : 16, cfg.grid_t ? cfg.grid_t : 1024,
                           cfg.seed, cfg.tol, &report.report));
  }
  return emit_report(cfg, report);
}

int run_verify_theorem(const RunConfig& cfg) {
  if (!cfg.p && !cfg.n) throw CommandError{kExitUsage, "--p (or --n for ISOP) is required"};
  const double x = cfg.n ? static_cast<double>(*cfg.n) : *cfg.p;
  const char* relaxed = cfg.relaxed.empty() ? nullptr : cfg.relaxed.c_str();
  ReportHandle report;
  if (!cfg.input.empty()) {
    MapHandle map = load_map(cfg);
    check(rl_verify_theorem_on(cfg.id.c_str(), x, map.map, cfg.tol, relaxed, &report.report));
  } else {
    check(rl_verify_theorem(cfg.id.c_str(), x, cfg.samples.value_or(200), cfg.degree, cfg.seed, cfg.tol, relaxed,
                            &report.report));
  }
  return emit_report(cfg, report);
}

int run_probe(const RunConfig& cfg) {
  const double p = require_p(cfg);
  ReportHandle report;
  check(rl_probe_sharpness(cfg.id.c_str(), p, cfg.gamma_frac.data(), cfg.gamma_frac.size(), cfg.tol,
                           &report.report));
  return emit_report(cfg, report);
}

int run_suite(const RunConfig& cfg) {
  rl_suite_options options{};
  options.seed = cfg.seed;
  options.grid.n_r = cfg.grid_r;
  options.grid.n_t = cfg.grid_t;
  options.theorem_samples = cfg.samples.value_or(0);
  options.degree = cfg.degree;
  options.tolerance = cfg.tol;
  ReportHandle report;
  check(rl_run_suite(&options, &report.report));
  return emit_report(cfg, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp conjugate-function and Riesz-type inequality laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "Random seed (recorded in the output)");
  };
  auto exponent = [&](CLI::App* sub) { sub->add_option("--p", cfg.p, "Exponent"); };
  auto tolerance = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Acceptance tolerance")->check(CLI::PositiveNumber);
  };
  auto grids = [&](CLI::App* sub) {
    sub->add_option("--grid-r", cfg.grid_r, "Radial grid nodes (0 = default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-t", cfg.grid_t, "Angular grid nodes (0 = default)")->check(CLI::NonNegativeNumber);
  };

  CLI::App* constants = app.add_subcommand("constants", "Table of sharp constants at p (or n)");
  common(constants);
  exponent(constants);
  constants->add_option("--n", cfg.n, "Integer parameter of the isoperimetric constant");

  CLI::App* norms = app.add_subcommand("norms", "Hardy, mixed and Bergman norms of a map");
  common(norms);
  exponent(norms);
  grids(norms);
  norms->add_option("--input", cfg.input, "HarmonicMap JSON file (default: random map)");
  norms->add_option("--degree", cfg.degree, "Degree of the random map")->check(CLI::NonNegativeNumber);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Harmonic conjugate of a map with its boundary series");
  common(hilbert);
  hilbert->add_option("--input", cfg.input, "HarmonicMap JSON file (default: random map)");
  hilbert->add_option("--degree", cfg.degree, "Degree of the random map")->check(CLI::NonNegativeNumber);

  CLI::App* lemma = app.add_subcommand("verify-lemma", "Grid scan of a pointwise inequality");
  common(lemma);
  exponent(lemma);
  grids(lemma);
  tolerance(lemma);
  lemma->add_option("--id", cfg.id, "Inequality id")->required();

  CLI::App* sub = app.add_subcommand("subharmonic", "Sub-mean test of a minorant");
  common(sub);
  exponent(sub);
  grids(sub);
  tolerance(sub);
  sub->add_option("--id", cfg.id, "Minorant id")->required();
  sub->add_option("--samples", cfg.samples, "Centers (or complex lines)")->check(CLI::PositiveNumber);

  CLI::App* theorem = app.add_subcommand("verify-theorem", "Integral bound on random or given maps");
  common(theorem);
  exponent(theorem);
  tolerance(theorem);
  theorem->add_option("--id", cfg.id, "Theorem id")->required();
  theorem->add_option("--n", cfg.n, "Integer parameter (ISOP)");
  theorem->add_option("--samples", cfg.samples, "Number of random maps")->check(CLI::PositiveNumber);
  theorem->add_option("--degree", cfg.degree, "Maximal degree of the random maps")->check(CLI::PositiveNumber);
  theorem->add_option("--input", cfg.input, "Check this HarmonicMap JSON file instead");
  theorem->add_option("--relaxed", cfg.relaxed, "Weaker hypothesis (RE_NONNEG for KALAJ, p <= 3)");

  CLI::App* probe = app.add_subcommand("probe-sharpness", "Calderon ratios approaching the sharp constant");
  common(probe);
  exponent(probe);
  tolerance(probe);
  probe->add_option("--id", cfg.id, "PRENTE, VER2 or VER3")->required();
  probe->add_option("--gamma-frac", cfg.gamma_frac, "Fractions of the critical angle, in (0, 1)");

  CLI::App* suite = app.add_subcommand("suite", "Full verification battery");
  common(suite);
  grids(suite);
  tolerance(suite);
  suite->add_option("--samples", cfg.samples, "Random maps per theorem and exponent")->check(CLI::PositiveNumber);
  suite->add_option("--degree", cfg.degree, "Maximal degree of the random maps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*constants) return run_constants(cfg);
    if (*norms) return run_norms(cfg);
    if (*hilbert) return run_hilbert(cfg);
    if (*lemma) return run_verify_lemma(cfg);
    if (*sub) return run_subharmonic(cfg);
    if (*theorem) return run_verify_theorem(cfg);
    if (*probe) return run_probe(cfg);
    if (*suite) return run_suite(cfg);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
