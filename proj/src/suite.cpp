#include "rieszlab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rieszlab/constants.hpp"
#include "rieszlab/function_core.hpp"
#include "rieszlab/hilbert.hpp"
#include "rieszlab/inequality_lab.hpp"
#include "rieszlab/norms.hpp"
#include "rieszlab/theorem_suite.hpp"

namespace rieszlab {

using std::numbers::pi;

namespace {

constexpr double kTheoremExponents[] = {1.25, 1.5, 2.0, 3.0, 4.0, 6.0};

double angular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * pi));
}

std::uint64_t section_seed(const SuiteOptions& options, int section) {
  return derive_seed(options.seed, static_cast<std::uint64_t>(section));
}

SuiteSection constant_identities() {
  SuiteSection s{1, "Constant identities", {}, {}};
  double worst_product = 0.0, worst_csc = 0.0;
  for (int i = 0; i < 70; ++i) {
    const double p = 1.1 + (8.0 - 1.1) * i / 69.0;
    const double angle = pi / (2.0 * conjugate_max(p));
    const double a = sharp_constant(ConstantKind::A, p);
    const double b = sharp_constant(ConstantKind::B, p);
    worst_product = std::max(worst_product, std::abs(a * b - 1.0 / std::tan(angle)));
    worst_csc = std::max(worst_csc, std::abs(std::sqrt(2.0) * a - 1.0 / std::sin(angle)));
  }
  s.check("A*B equals cot over 70 exponents", worst_product < 1e-12, worst_product);
  s.check("sqrt2*A equals csc over 70 exponents", worst_csc < 1e-12, worst_csc);
  return s;
}

SuiteSection quadratic_bridge(const SuiteOptions& options) {
  SuiteSection s{2, "Hardy and mixed norms at p = 2", {}, {}};
  const std::uint64_t seed = section_seed(options, 2);
  double worst_identity = 0.0, worst_equal = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int degree = 1 + i % 8;
    const HarmonicMap m = random_harmonic(degree, derive_seed(seed, 2 * i), Constraint::None);
    const double hardy = hardy_norm(m, 2.0), triple = triple_norm(m, 2.0);
    const double cross = 2.0 * (m.g.coeff(0) * m.h.coeff(0)).real();
    worst_identity = std::max(worst_identity, std::abs(hardy * hardy - triple * triple - cross));

    const HarmonicMap z = random_harmonic(degree, derive_seed(seed, 2 * i + 1), Constraint::ReZero);
    worst_equal = std::max(worst_equal, std::abs(hardy_norm(z, 2.0) - triple_norm(z, 2.0)));
  }
  s.check("hardy^2 - triple^2 - 2Re(g0 h0) on 100 maps", worst_identity < 1e-10, worst_identity);
  s.check("hardy = triple under RE_ZERO on 100 maps", worst_equal < 1e-10, worst_equal);
  return s;
}

FourierSeries random_series(int degree, Rng& rng) {
  FourierSeries series(degree);
  for (int k = -degree; k <= degree; ++k) series.set(k, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  return series;
}

SuiteSection hilbert_transform(const SuiteOptions& options) {
  SuiteSection s{3, "Periodic Hilbert transform", {}, {}};
  FourierSeries cosine(1);
  cosine.set(1, 0.5);
  cosine.set(-1, 0.5);
  FourierSeries sine(1);
  sine.set(1, cplx{0.0, -0.5});
  sine.set(-1, cplx{0.0, 0.5});
  s.check("H[cos] = sin coefficientwise", periodic_hilbert(cosine) == sine, 0.0);

  Rng rng(section_seed(options, 3));
  int involution_failures = 0;
  for (int i = 0; i < 50; ++i) {
    const FourierSeries x = random_series(1 + i % 16, rng);
    const FourierSeries twice = periodic_hilbert(periodic_hilbert(x));
    for (int k = -x.degree(); k <= x.degree(); ++k)
      if (twice[k] != -x[k]) {
        ++involution_failures;
        break;
      }
  }
  s.check("H^2 = -Id on 50 random series", involution_failures == 0, involution_failures);

  double worst = 0.0;
  for (int i = 0; i < 16; ++i) {
    const FourierSeries x = random_series(1 + i, rng);
    const FourierSeries hx = periodic_hilbert(x);
    const cplx mean_term = hx[0];
    for (int j = 0; j < 8; ++j) {
      const double tau = rng.uniform(-pi, pi);
      const cplx singular = singular_hilbert_at(x, tau, 1e-6);
      worst = std::max(worst, std::abs(singular - (hx(tau) - mean_term)));
    }
  }
  s.check("singular form matches multiplier form at eps = 1e-6", worst < 1e-6, worst);
  return s;
}

SuiteSection conjugate_theorem(const SuiteOptions& options) {
  SuiteSection s{4, "Sharp conjugate-function bound", {}, {}};
  const std::uint64_t seed = section_seed(options, 4);
  for (double p : kTheoremExponents)
    s.add(verify_theorem(TheoremId::PRENTE, p, options.theorem_samples, options.degree, seed, options.tolerance));

  const double fractions[] = {0.995};
  const double ratio = sharpness_probe(TheoremId::PRENTE, 1.5, fractions).front();
  s.check("Calderon ratio at p = 1.5, gamma = 0.995*pi/3 reaches 0.9*sqrt3", ratio >= 0.9 * std::sqrt(3.0),
          ratio);

  // With g(0) = h(0) = 0 the conjugate is an isometry of h^2.
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    HarmonicMap m = random_harmonic(1 + i % 8, derive_seed(seed, 1000 + i), Constraint::None);
    m = {m.g.with_coeff(0, 0.0), m.h.with_coeff(0, 0.0)};
    worst = std::max(worst, std::abs(hardy_norm(conjugate_map(m), 2.0) / hardy_norm(m, 2.0) - 1.0));
  }
  s.check("conjugation is an isometry at p = 2 on centred maps", worst < 1e-10, worst);
  return s;
}

bool identically_zero(InequalityId id, double p) {
  const InequalityInfo& in = info(id);
  double worst = 0.0;
  for (int i = 1; i <= 40; ++i)
    for (int j = 0; j <= 80; ++j) {
      const double t = in.axis_lo + (in.axis_hi - in.axis_lo) * j / 80.0;
      worst = std::max(worst, std::abs(normalized_slack(id, p, i / 40.0, t)));
    }
  return worst < 1e-12;
}

SuiteSection pointwise_lemmas(const SuiteOptions& options) {
  SuiteSection s{5, "Pointwise lemma grids", {}, {}};
  const std::uint64_t seed = section_seed(options, 5);
  double worst_r = 0.0, worst_t = 0.0, worst_slack = 0.0;
  bool loci_ok = true;
  for (InequalityId id : all_inequalities()) {
    const InequalityInfo& in = info(id);
    for (double p : sample_exponents(id)) {
      s.add(verify_pointwise(id, p, options.grid));
      if (in.shape != SlackShape::TwoVariable) continue;
      s.add(homogeneity_scan(id, p, 20000, derive_seed(seed, static_cast<std::uint64_t>(id)), options.tolerance));

      const std::vector<double> loci = equality_angles(id, p);
      if (loci.empty() || identically_zero(id, p)) continue;
      const EqualityPoint point = locate_equality(id, p);
      const double cell_r = 1.0 / options.grid.n_r;
      const double cell_t = (in.axis_hi - in.axis_lo) / options.grid.n_t;
      double dt = 2.0 * pi;
      for (double t : loci) dt = std::min(dt, angular_distance(point.params[1], t));
      const double dr = std::abs(point.params[0] - 1.0);
      worst_r = std::max(worst_r, dr / cell_r);
      worst_t = std::max(worst_t, dt / cell_t);
      worst_slack = std::max(worst_slack, std::abs(point.slack));
      if (dr > cell_r || dt > cell_t || std::abs(point.slack) > 1e-7) loci_ok = false;
    }
  }
  s.check("located equality points within one cell of the stated loci", loci_ok, std::max(worst_r, worst_t));
  s.check("slack at located equality points", worst_slack <= 1e-7, worst_slack);
  return s;
}

SuiteSection subharmonicity(const SuiteOptions& options) {
  SuiteSection s{6, "Sub-mean property of the minorants", {}, {}};
  const std::uint64_t seed = section_seed(options, 6);
  const std::pair<MinorantId, std::vector<double>> one_variable[] = {
      {MinorantId::ReBranch, {1.25, 1.5, 1.75, 2.0}},
      {MinorantId::PhiMid, {2.0, 2.5, 3.0, 4.0}},
      {MinorantId::PhiHigh, {4.0, 6.0, 16.0, 64.0}},
      {MinorantId::Psi, {1.5, 3.0, 8.0, 32.0}},
  };
  std::uint64_t k = 0;
  for (const auto& [id, exponents] : one_variable)
    for (double p : exponents) s.add(check_submean(id, p, 64, 16, 1024, derive_seed(seed, k++), options.tolerance));

  const double mean = origin_circle_mean(MinorantId::PhiMid, 3.0, 1.0);
  const double expected = 2.0 / (3.0 * pi);
  s.check("PHI_MID origin circle mean at p = 3 equals 2/(3pi)", std::abs(mean - expected) <= 1e-10,
          mean);

  for (MinorantId id : {MinorantId::FCal, MinorantId::GCal})
    for (double p : {1.25, 1.5, 3.0, 4.0, 6.0})
      s.add(check_pluri_lines(id, p, 64, derive_seed(seed, k++), options.tolerance));
  return s;
}

SuiteSection isoperimetric(const SuiteOptions& options) {
  SuiteSection s{7, "Isoperimetric inequalities", {}, {}};
  const std::uint64_t seed = section_seed(options, 7);
  const HarmonicMap one_plus_z{TaylorPoly({1.0, 1.0}), TaylorPoly({0.0})};
  const BoundSides sides = theorem_sides(TheoremId::STREBEL, one_plus_z, 1.0);
  const double rhs = 16.0 / (pi * pi);
  s.check("area integral of |1+z|^2 is 3/2", std::abs(sides.lhs - 1.5) < 1e-12, sides.lhs);
  s.check("boundary side for 1+z is 16/pi^2", std::abs(sides.rhs - rhs) < 1e-6 * rhs, sides.rhs);
  s.check("3/2 <= 16/pi^2", sides.lhs <= sides.rhs, sides.rhs - sides.lhs);

  for (double p : {0.5, 1.0, 2.0})
    s.add(verify_theorem(TheoremId::IPL, p, 100, options.degree, seed, options.tolerance));
  for (int n : {2, 3, 4}) s.add(verify_theorem(TheoremId::ISOP, n, 100, options.degree, seed, options.tolerance));
  return s;
}

SuiteSection conjugate_part_constant() {
  SuiteSection s{8, "Imaginary-part constant at p = 4", {}, {}};
  const HarmonicMap z{TaylorPoly({0.0, 1.0}), TaylorPoly({0.0})};
  const BoundSides sides = theorem_sides(TheoremId::VER3, z, 4.0);
  const double imag_norm = sides.lhs;
  const double full_norm = hardy_norm(z, 4.0);
  s.check("||sin t||_4 equals (3/8)^(1/4)", std::abs(imag_norm - std::pow(0.375, 0.25)) < 1e-12, imag_norm);
  s.check("sin(pi/8) form is violated by f = z", imag_norm > std::sin(pi / 8.0) * full_norm,
          imag_norm - std::sin(pi / 8.0) * full_norm);
  s.check("cos(pi/8) form holds for f = z", imag_norm <= std::cos(pi / 8.0) * full_norm,
          std::cos(pi / 8.0) * full_norm - imag_norm);
  return s;
}

SuiteSection theorem_bounds(const SuiteOptions& options) {
  SuiteSection s{0, "Remaining theorem bounds", {}, {}};
  const std::uint64_t seed = section_seed(options, 9);
  const TheoremId tags[] = {TheoremId::KALAJ,        TheoremId::KALAJ1,       TheoremId::VER2,
                            TheoremId::VER3,         TheoremId::KALAJ2_NESI1, TheoremId::KALAJ2_NESI2,
                            TheoremId::HILI_PAIRS};
  for (TheoremId id : tags)
    for (double p : kTheoremExponents)
      if (info(id).range.contains(p))
        s.add(verify_theorem(id, p, options.theorem_samples, options.degree, seed, options.tolerance));
  for (double p : {1.5, 2.0, 2.5, 3.0})
    s.add(verify_theorem(TheoremId::KALAJ, p, options.theorem_samples, options.degree, seed, options.tolerance,
                         Constraint::ReNonNeg));
  s.add(verify_theorem(TheoremId::STREBEL, 1.0, options.theorem_samples, options.degree, seed, options.tolerance));

  const double fractions[] = {0.5, 0.9, 0.99};
  for (TheoremId id : {TheoremId::PRENTE, TheoremId::VER2, TheoremId::VER3})
    s.add(probe_report(id, 1.5, fractions, options.tolerance));
  return s;
}

nlohmann::ordered_json section_json(const SuiteSection& s) {
  nlohmann::ordered_json out;
  if (s.number > 0) out["criterion"] = s.number;
  out["title"] = s.title;
  out["passed"] = s.passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const SuiteCheck& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}});
  out["checks"] = checks;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const VerificationReport& r : s.reports) reports.push_back(nlohmann::ordered_json::parse(to_json(r, -1)));
  out["reports"] = reports;
  return out;
}

}  // namespace

bool SuiteSection::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; }) &&
         std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

void SuiteSection::check(std::string name, bool ok, double value) {
  checks.push_back({std::move(name), ok, value});
}

void SuiteSection::add(VerificationReport report) { reports.push_back(std::move(report)); }

bool SuiteResult::passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const SuiteSection& s) { return s.passed(); });
}

SuiteResult run_suite(const SuiteOptions& options) {
  options.grid.validate();
  if (options.theorem_samples < 1) throw std::invalid_argument("theorem_samples must be positive");
  if (options.degree < 1) throw std::invalid_argument("degree must be positive");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Stopwatch clock;
  SuiteResult result;
  result.seed = options.seed;
  result.sections.push_back(constant_identities());
  result.sections.push_back(quadratic_bridge(options));
  result.sections.push_back(hilbert_transform(options));
  result.sections.push_back(conjugate_theorem(options));
  result.sections.push_back(pointwise_lemmas(options));
  result.sections.push_back(subharmonicity(options));
  result.sections.push_back(isoperimetric(options));
  result.sections.push_back(conjugate_part_constant());
  result.sections.push_back(theorem_bounds(options));
  result.elapsed_ms = clock.elapsed_ms();
  return result;
}

std::string suite_to_json(const SuiteResult& result, int indent) {
  nlohmann::ordered_json out;
  out["id"] = "SUITE";
  out["passed"] = result.passed();
  out["seed"] = result.seed;
  nlohmann::ordered_json sections = nlohmann::ordered_json::array();
  for (const SuiteSection& s : result.sections) sections.push_back(section_json(s));
  out["sections"] = sections;
  out["elapsed_ms"] = result.elapsed_ms;
  return out.dump(indent);
}

std::string suite_to_csv(const SuiteResult& result) {
  std::string out = "section," + csv_header() + "\n";
  for (const SuiteSection& s : result.sections)
    for (const VerificationReport& r : s.reports) out += std::to_string(s.number) + "," + to_csv_row(r) + "\n";
  return out;
}

std::string suite_to_human(const SuiteResult& result) {
  std::ostringstream out;
  out << "suite seed=" << result.seed << (result.passed() ? " PASS" : " FAIL") << "\n";
  for (const SuiteSection& s : result.sections) {
    out << (s.passed() ? "PASS " : "FAIL ");
    if (s.number > 0) out << "[" << s.number << "] ";
    out << s.title << " (" << s.checks.size() << " checks, " << s.reports.size() << " reports)\n";
    for (const SuiteCheck& c : s.checks)
      if (!c.passed) out << "  failed check: " << c.name << " (value " << c.value << ")\n";
    for (const VerificationReport& r : s.reports)
      if (!r.passed()) out << to_human(r);
  }
  out << "elapsed_ms=" << result.elapsed_ms << "\n";
  return out.str();
}

}  // namespace rieszlab
