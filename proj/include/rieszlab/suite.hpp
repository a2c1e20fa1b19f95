#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rieszlab/inequality_lab.hpp"
#include "rieszlab/report.hpp"

namespace rieszlab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Grid of the pointwise scans; the defaults are the acceptance sizes.
  GridSpec grid;
  /// Random maps per (theorem, p).
  int theorem_samples = 200;
  int degree = 8;
  double tolerance = 1e-9;
};

/// One check inside a section, with the measured value it was decided on.
struct SuiteCheck {
  std::string name;
  bool passed = true;
  double value = 0.0;
};

/// A numbered acceptance criterion (1-8) or an unnumbered invariant block (0).
struct SuiteSection {
  int number = 0;
  std::string title;
  std::vector<SuiteCheck> checks;
  std::vector<VerificationReport> reports;

  bool passed() const;
  void check(std::string name, bool ok, double value);
  void add(VerificationReport report);
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<SuiteSection> sections;
  double elapsed_ms = 0.0;

  bool passed() const;
};

/// Runs the full verification battery.
SuiteResult run_suite(const SuiteOptions& options = {});

std::string suite_to_json(const SuiteResult& result, int indent = 2);
std::string suite_to_csv(const SuiteResult& result);
std::string suite_to_human(const SuiteResult& result);

}  // namespace rieszlab
