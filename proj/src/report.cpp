#include "rieszlab/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rieszlab {

using nlohmann::ordered_json;

void VerificationReport::add_violation(std::vector<double> params, double slack) {
  ++violation_count;
  if (violations.size() < kStoredViolations) violations.push_back({std::move(params), slack});
}

void VerificationReport::observe(double slack, const std::vector<double>& params) {
  if (!min_slack || slack < *min_slack) {
    min_slack = slack;
    argmin = params;
  }
}

namespace {

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["id"] = r.id;
  if (r.p) j["p"] = *r.p;
  ordered_json grid = ordered_json::object();
  for (const auto& [key, value] : r.grid) grid[key] = value;
  grid["tolerance"] = r.tolerance;
  grid["violation_count"] = r.violation_count;
  j["grid"] = grid;
  if (r.min_slack) j["min_slack"] = *r.min_slack;
  if (!r.argmin.empty()) j["argmin"] = r.argmin;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations) violations.push_back({{"params", v.params}, {"slack", v.slack}});
  j["violations"] = violations;
  if (r.constant) j["constant"] = *r.constant;
  if (r.ratio_max) j["ratio_max"] = *r.ratio_max;
  if (!r.ratios.empty()) j["ratios"] = r.ratios;
  if (r.seed) j["seed"] = *r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string join(const std::vector<double>& xs, const char* sep, std::string (*f)(double)) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string csv_header() {
  return "id,p,grid,min_slack,argmin,violations,constant,ratio_max,seed,elapsed_ms";
}

std::string to_csv_row(const VerificationReport& r) {
  std::string grid;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    if (i) grid += ' ';
    grid += r.grid[i].first + "=" + fmt_short(r.grid[i].second);
  }
  std::ostringstream out;
  out << r.id << ',' << (r.p ? fmt(*r.p) : "") << ',' << grid << ','
      << (r.min_slack ? fmt(*r.min_slack) : "") << ',' << join(r.argmin, " ", fmt) << ','
      << r.violation_count << ',' << (r.constant ? fmt(*r.constant) : "") << ','
      << (r.ratio_max ? fmt(*r.ratio_max) : "") << ',' << (r.seed ? std::to_string(*r.seed) : "") << ','
      << fmt_short(r.elapsed_ms);
  return out.str();
}

std::string to_human(const VerificationReport& r) {
  std::ostringstream out;
  out << r.id << (r.passed() ? "  PASS" : "  FAIL") << '\n';
  if (r.p) out << "  p           " << fmt_short(*r.p) << '\n';
  for (const auto& [key, value] : r.grid) out << "  " << key << std::string(key.size() < 12 ? 12 - key.size() : 1, ' ') << fmt_short(value) << '\n';
  if (r.min_slack) out << "  min_slack   " << fmt_short(*r.min_slack) << '\n';
  if (!r.argmin.empty()) out << "  argmin      (" << join(r.argmin, ", ", fmt_short) << ")\n";
  if (r.constant) out << "  constant    " << fmt_short(*r.constant) << '\n';
  if (r.ratio_max) out << "  ratio_max   " << fmt_short(*r.ratio_max) << '\n';
  if (!r.ratios.empty()) out << "  ratios      " << join(r.ratios, " ", fmt_short) << '\n';
  if (r.seed) out << "  seed        " << *r.seed << '\n';
  out << "  violations  " << r.violation_count << '\n';
  for (const Violation& v : r.violations)
    out << "    at (" << join(v.params, ", ", fmt_short) << ") slack " << fmt_short(v.slack) << '\n';
  out << "  elapsed_ms  " << fmt_short(r.elapsed_ms) << '\n';
  return out.str();
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::elapsed_ms() const {
  const auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count();
  return static_cast<double>(now - start_ns_) * 1e-6;
}

}  // namespace rieszlab
