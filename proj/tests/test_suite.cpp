#include <doctest.h>

#include <json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "rieszlab/suite.hpp"

using namespace rieszlab;
using nlohmann::json;

namespace {

SuiteOptions quick_options(std::uint64_t seed) {
  SuiteOptions options;
  options.seed = seed;
  options.grid.n_r = 200;
  options.grid.n_t = 400;
  options.grid.n_1d = 20000;
  options.theorem_samples = 6;
  options.degree = 4;
  return options;
}

const SuiteResult& quick_result() {
  static const SuiteResult result = run_suite(quick_options(3));
  return result;
}

std::string without_timing(std::string text) {
  return std::regex_replace(text, std::regex("\"elapsed_ms\": [-+0-9.eE]+"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("suite sections cover every criterion") {
  const SuiteResult& result = quick_result();
  CHECK(result.seed == 3u);
  std::set<int> numbers;
  for (const SuiteSection& s : result.sections) {
    numbers.insert(s.number);
    CHECK_FALSE(s.title.empty());
    CHECK(s.checks.size() + s.reports.size() > 0);
    INFO(s.title);
    CHECK(s.passed());
  }
  CHECK(numbers == std::set<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(result.passed());
}

TEST_CASE("section pass flag follows its checks and reports") {
  SuiteSection s{1, "demo", {}, {}};
  CHECK(s.passed());
  s.check("fine", true, 1.0);
  CHECK(s.passed());
  VerificationReport bad;
  bad.id = "X";
  bad.add_violation({0.0}, -1.0);
  s.add(bad);
  CHECK_FALSE(s.passed());

  SuiteSection t{2, "demo", {}, {}};
  t.check("broken", false, 0.0);
  CHECK_FALSE(t.passed());
  SuiteResult r;
  r.sections = {s};
  CHECK_FALSE(r.passed());
}

TEST_CASE("JSON layout") {
  const json doc = json::parse(suite_to_json(quick_result()));
  CHECK(doc["id"] == "SUITE");
  CHECK(doc["seed"] == 3);
  CHECK(doc["passed"] == true);
  CHECK(doc.contains("elapsed_ms"));
  REQUIRE(doc["sections"].is_array());
  for (const json& section : doc["sections"]) {
    CHECK(section.contains("title"));
    CHECK(section["passed"].is_boolean());
    for (const json& check : section["checks"]) {
      CHECK(check["name"].is_string());
      CHECK(check["passed"].is_boolean());
      CHECK(check["value"].is_number());
    }
    for (const json& report : section["reports"]) CHECK(report["id"].is_string());
  }
}

TEST_CASE("CSV and human layouts") {
  const std::string csv = suite_to_csv(quick_result());
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("section,id,p", 0) == 0);
  std::size_t rows = 0, reports = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  for (const SuiteSection& s : quick_result().sections) reports += s.reports.size();
  CHECK(rows == reports);

  const std::string human = suite_to_human(quick_result());
  CHECK(human.find("PASS [1]") != std::string::npos);
  CHECK(human.find("FAIL") == std::string::npos);
}

TEST_CASE("suite output is deterministic for a fixed seed") {
  const SuiteResult again = run_suite(quick_options(3));
  CHECK(without_timing(suite_to_json(again)) == without_timing(suite_to_json(quick_result())));
}

TEST_CASE("invalid options are rejected") {
  SuiteOptions options = quick_options(1);
  options.theorem_samples = 0;
  CHECK_THROWS_AS(run_suite(options), std::invalid_argument);
  options = quick_options(1);
  options.grid.n_r = 2;
  CHECK_THROWS_AS(run_suite(options), std::invalid_argument);
}
