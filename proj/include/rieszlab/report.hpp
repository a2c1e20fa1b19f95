#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rieszlab {

struct Violation {
  std::vector<double> params;
  double slack = 0.0;
};

/// Outcome of a grid scan or theorem check. Optional fields are omitted from
/// the serialized forms when unset.
struct VerificationReport {
  static constexpr std::size_t kStoredViolations = 32;

  std::string id;
  std::optional<double> p;
  /// Ordered key/value summary of the discretization.
  std::vector<std::pair<std::string, double>> grid;
  std::optional<double> min_slack;
  std::vector<double> argmin;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::optional<double> constant;
  std::optional<double> ratio_max;
  std::vector<double> ratios;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-9;
  double elapsed_ms = 0.0;

  bool passed() const { return violation_count == 0; }

  /// Counts every violation; stores the first kStoredViolations.
  void add_violation(std::vector<double> params, double slack);

  /// Lowers min_slack/argmin when `slack` is a new minimum.
  void observe(double slack, const std::vector<double>& params);
};

std::string to_json(const VerificationReport& report, int indent = 2);
std::string csv_header();
std::string to_csv_row(const VerificationReport& report);
std::string to_human(const VerificationReport& report);

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch();
  double elapsed_ms() const;

 private:
  std::int64_t start_ns_;
};

}  // namespace rieszlab
