#include "rieszlab/theorem_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rieszlab/error.hpp"
#include "rieszlab/hilbert.hpp"
#include "rieszlab/quadrature.hpp"

namespace rieszlab {

using std::numbers::pi;

namespace {

constexpr ParamRange kOpenExponent{1.0, 64.0, true, false};

constexpr std::array<TheoremInfo, 11> kInfo = {{
    {TheoremId::KALAJ, "KALAJ", kOpenExponent, Constraint::ReZero, false, false},
    {TheoremId::KALAJ1, "KALAJ1", kOpenExponent, Constraint::ReNonPos, false, false},
    {TheoremId::PRENTE, "PRENTE", kOpenExponent, Constraint::None, false, false},
    {TheoremId::VER2, "VER2", kOpenExponent, Constraint::None, false, true},
    {TheoremId::VER3, "VER3", kOpenExponent, Constraint::None, false, true},
    {TheoremId::KALAJ2_NESI1, "KALAJ2_NESI1", kOpenExponent, Constraint::ReZero, false, false},
    {TheoremId::KALAJ2_NESI2, "KALAJ2_NESI2", kOpenExponent, Constraint::ReNonPos, false, false},
    {TheoremId::HILI_PAIRS, "HILI_PAIRS", kOpenExponent, Constraint::None, false, false},
    {TheoremId::ISOP, "ISOP", {2.0, 64.0, false, false}, Constraint::None, true, false},
    {TheoremId::STREBEL, "STREBEL", {0.0, 64.0, true, false}, Constraint::None, false, true},
    {TheoremId::IPL, "IPL", {0.0, 16.0, true, false}, Constraint::None, false, false},
}};

constexpr std::array<TheoremId, 11> kIds = {
    TheoremId::KALAJ,        TheoremId::KALAJ1,     TheoremId::PRENTE, TheoremId::VER2,
    TheoremId::VER3,         TheoremId::KALAJ2_NESI1, TheoremId::KALAJ2_NESI2, TheoremId::HILI_PAIRS,
    TheoremId::ISOP,         TheoremId::STREBEL,    TheoremId::IPL};

double cos_conjugate(double p) { return std::cos(pi / (2.0 * conjugate_max(p))); }

void require_parameter(TheoremId id, double x) {
  const TheoremInfo& in = info(id);
  if (!in.range.contains(x) || (in.integer_parameter && x != std::floor(x))) {
    std::ostringstream msg;
    msg << in.name << ": parameter " << x << " outside " << in.range.describe()
        << (in.integer_parameter ? " (integers only)" : "");
    throw DomainError(msg.str());
  }
}

// Re(g(0)h(0)) relative to |g(0)h(0)|, zero for exact zero products.
double re_product(const HarmonicMap& map) { return (map.g.coeff(0) * map.h.coeff(0)).real(); }

bool satisfies(Constraint c, const HarmonicMap& map) {
  const cplx prod = map.g.coeff(0) * map.h.coeff(0);
  const double slack = 1e-14 * std::max(1.0, std::abs(prod));
  switch (c) {
    case Constraint::None: return true;
    case Constraint::ReZero: return std::abs(prod.real()) <= slack;
    case Constraint::ReNonNeg: return prod.real() >= -slack;
    case Constraint::ReNonPos: return prod.real() <= slack;
  }
  return true;
}

bool is_holomorphic(const HarmonicMap& map) {
  for (cplx c : map.h.coeffs())
    if (c != cplx{}) return false;
  return true;
}

// Real part of g as a harmonic map: (g/2, g/2); imaginary part: (-ig/2, -ig/2).
HarmonicMap real_part(const TaylorPoly& g) { return {g.scaled(0.5), g.scaled(0.5)}; }
HarmonicMap imag_part(const TaylorPoly& g) { return {g.scaled({0.0, -0.5}), g.scaled({0.0, -0.5})}; }

double circle_mean_of(const std::function<double(cplx)>& f, int n) {
  return circle_mean([&](double t) { return f(std::polar(1.0, t)); }, n);
}

double disk_mean_of(const std::function<double(cplx)>& f, int n_angle, int n_radial) {
  return gauss_integrate(
      [&](double r) {
        return 2.0 * r * circle_mean([&](double t) { return f(std::polar(r, t)); }, n_angle);
      },
      0.0, 1.0, n_radial);
}

VerificationReport make_report(TheoremId id, double x, double tol) {
  VerificationReport report;
  report.id = std::string(info(id).name);
  report.p = x;
  report.tolerance = tol;
  report.constant = theorem_constant(id, x);
  return report;
}

void record(VerificationReport& report, double index, const BoundSides& s, double tol) {
  const double ratio = s.rhs > 0.0 ? s.lhs / s.rhs : (s.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  report.ratio_max = std::max(report.ratio_max.value_or(0.0), ratio);
  const double slack = 1.0 - ratio;
  report.observe(slack, {index});
  if (s.lhs > s.rhs * (1.0 + tol)) report.add_violation({index, s.lhs, s.rhs}, slack);
}

std::vector<LinePair> line_catalog() {
  return {{LinePairKind::PoissonKernel, 0.5}, {LinePairKind::PoissonKernel, 1.0},
          {LinePairKind::PoissonKernel, 2.0}, {LinePairKind::Lorentzian, 1.0},
          {LinePairKind::Indicator, 1.0}};
}

BoundSides line_pair_sides(const LinePair& pair, double p) {
  const std::vector<double> breaks = pair.breakpoints();
  auto phi = [&](double x) { return line_pair_values(pair, x).first; };
  auto conj = [&](double x) {
    for (double b : breaks)
      if (x == b && pair.kind == LinePairKind::Indicator) return 0.0;
    return line_pair_values(pair, x).second;
  };
  return {line_lp_norm(conj, p, breaks), theorem_constant(TheoremId::HILI_PAIRS, p) * line_lp_norm(phi, p, breaks)};
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kIds; }

const TheoremInfo& info(TheoremId id) { return kInfo[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const TheoremInfo& in : kInfo)
    if (in.name == name) return in.id;
  return std::nullopt;
}

double theorem_constant(TheoremId id, double x) {
  require_parameter(id, x);
  switch (id) {
    case TheoremId::KALAJ:
    case TheoremId::KALAJ2_NESI1: return sharp_constant(ConstantKind::A, x);
    case TheoremId::KALAJ1:
    case TheoremId::KALAJ2_NESI2: return sharp_constant(ConstantKind::B, x);
    case TheoremId::PRENTE:
    case TheoremId::HILI_PAIRS: return sharp_constant(ConstantKind::HilbertNorm, x);
    case TheoremId::VER2: return sharp_constant(ConstantKind::VerbitskyCsc, x);
    case TheoremId::VER3: return cos_conjugate(x);
    case TheoremId::ISOP: return sharp_constant(ConstantKind::Isop, x);
    case TheoremId::STREBEL:
    case TheoremId::IPL: return 1.0;
  }
  return 1.0;
}

void check_hypothesis(TheoremId id, const HarmonicMap& map, double x, std::optional<Constraint> relaxed) {
  require_parameter(id, x);
  const TheoremInfo& in = info(id);
  if (in.holomorphic) {
    if (!is_holomorphic(map)) throw HypothesisError(std::string(in.name) + ": map must be holomorphic (h = 0)");
    if ((id == TheoremId::VER2 || id == TheoremId::VER3) &&
        std::abs(map.g.coeff(0).imag()) > 1e-14 * std::max(1.0, std::abs(map.g.coeff(0))))
      throw HypothesisError(std::string(in.name) + ": Im g(0) must vanish");
    return;
  }
  Constraint c = in.constraint;
  if (relaxed) {
    const bool allowed = id == TheoremId::KALAJ && *relaxed == Constraint::ReNonNeg && x <= 3.0;
    if (!allowed && *relaxed != in.constraint)
      throw HypothesisError(std::string(in.name) + ": constraint " + to_string(*relaxed) + " is not admitted at this p");
    c = *relaxed;
  }
  if (!satisfies(c, map)) {
    std::ostringstream msg;
    msg << in.name << ": hypothesis " << to_string(c) << " violated (Re(g(0)h(0)) = " << re_product(map) << ")";
    throw HypothesisError(msg.str());
  }
}

BoundSides theorem_sides(TheoremId id, const HarmonicMap& map, double x, std::optional<Constraint> relaxed) {
  if (id == TheoremId::HILI_PAIRS)
    throw std::invalid_argument("HILI_PAIRS works on the line catalog, not on disk maps");
  check_hypothesis(id, map, x, relaxed);
  const double k = theorem_constant(id, x);
  switch (id) {
    case TheoremId::KALAJ: return {triple_norm(map, x), k * hardy_norm(map, x)};
    case TheoremId::KALAJ1: return {hardy_norm(map, x), k * triple_norm(map, x)};
    case TheoremId::PRENTE: return {hardy_norm(conjugate_map(map), x), k * hardy_norm(map, x)};
    case TheoremId::VER2: return {hardy_norm(map, x), k * hardy_norm(real_part(map.g), x)};
    case TheoremId::VER3: return {hardy_norm(imag_part(map.g), x), k * hardy_norm(map, x)};
    case TheoremId::KALAJ2_NESI1: return {bergman_triple_norm(map, x), k * bergman_norm(map, x)};
    case TheoremId::KALAJ2_NESI2: return {bergman_norm(map, x), k * bergman_triple_norm(map, x)};
    case TheoremId::ISOP: {
      const int n = static_cast<int>(x);
      const double lhs = std::pow(disk_power_mean(map, 2.0 * n), 1.0 / (2.0 * n));
      const double rhs = k * std::pow(circle_power_mean(map, n, 1.0), 1.0 / n);
      return {lhs, rhs};
    }
    case TheoremId::STREBEL: {
      const double boundary = circle_power_mean(map, 1.0, 1.0);
      return {disk_power_mean(map, 2.0), boundary * boundary};
    }
    case TheoremId::IPL: {
      const double boundary = circle_mixed_mean(map, 2.0 * x, 1.0);
      return {disk_mixed_mean(map, 4.0 * x), boundary * boundary};
    }
    case TheoremId::HILI_PAIRS: break;
  }
  return {};
}

HarmonicMap theorem_sample(TheoremId id, int index, int degree, std::uint64_t seed,
                           std::optional<Constraint> relaxed) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const int deg = 1 + index % degree;
  const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(index));
  const TheoremInfo& in = info(id);
  if (in.holomorphic) {
    Rng rng(s);
    TaylorPoly g = random_taylor(deg, rng);
    if (id == TheoremId::VER2 || id == TheoremId::VER3) g = g.with_coeff(0, {g.coeff(0).real(), 0.0});
    return {g, TaylorPoly{}};
  }
  return random_harmonic(deg, s, relaxed.value_or(in.constraint));
}

VerificationReport verify_theorem(TheoremId id, double x, int samples, int degree, std::uint64_t seed,
                                  double tol, std::optional<Constraint> relaxed) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Stopwatch clock;
  VerificationReport report = make_report(id, x, tol);
  report.seed = seed;
  if (id == TheoremId::HILI_PAIRS) {
    const std::vector<LinePair> catalog = line_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const BoundSides s = line_pair_sides(catalog[i], x);
      report.ratios.push_back(s.lhs / s.rhs * *report.constant);
      record(report, static_cast<double>(i), s, tol);
    }
    report.grid = {{"pairs", static_cast<double>(catalog.size())}};
  } else {
    for (int i = 0; i < samples; ++i) {
      const HarmonicMap map = theorem_sample(id, i, degree, seed, relaxed);
      record(report, i, theorem_sides(id, map, x, relaxed), tol);
      if (id == TheoremId::ISOP) {
        const std::vector<double> chain = isoperimetric_chain(map, static_cast<int>(x));
        if (!chain_monotone(chain, tol)) report.add_violation({static_cast<double>(i), -1.0}, -1.0);
      }
    }
    report.grid = {{"samples", samples}, {"degree", degree}};
  }
  if (relaxed && *relaxed != info(id).constraint) report.id += ":" + to_string(*relaxed);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_theorem_on(TheoremId id, double x, std::span<const HarmonicMap> maps, double tol,
                                     std::optional<Constraint> relaxed) {
  if (maps.empty()) throw std::invalid_argument("no maps supplied");
  Stopwatch clock;
  VerificationReport report = make_report(id, x, tol);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    record(report, static_cast<double>(i), theorem_sides(id, maps[i], x, relaxed), tol);
    if (id == TheoremId::ISOP && !chain_monotone(isoperimetric_chain(maps[i], static_cast<int>(x)), tol))
      report.add_violation({static_cast<double>(i), -1.0}, -1.0);
  }
  report.grid = {{"samples", static_cast<double>(maps.size())}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::vector<double> isoperimetric_chain(const HarmonicMap& input, int n) {
  if (n < 2) throw DomainError("isoperimetric_chain: n must be an integer ≥ 2");
  const HarmonicMap map = input.normalized();
  const int deg = static_cast<int>(map.degree());
  const int n_angle = std::max(2048, 4 * n * deg + 1);
  const int n_radial = std::max(24, n * deg + 2);
  const double e = std::cos(pi / (2.0 * n));
  const double dn = n;

  auto mixed = [&](cplx z) { return std::norm(map.g(z)) + std::norm(map.h(z)); };
  auto prod = [&](cplx z) { return 2.0 * map.g(z) * map.h(z); };

  const double L = disk_mean_of([&](cplx z) { return std::pow(std::norm(map.value(z)), dn); }, n_angle, n_radial);
  const double X = disk_mean_of([&](cplx z) { return std::pow(mixed(z), dn); }, n_angle, n_radial);
  const double R = disk_mean_of([&](cplx z) { return std::pow(std::abs(prod(z).real()), dn); }, n_angle, n_radial);
  const double P = disk_mean_of([&](cplx z) { return std::pow(std::abs(prod(z)), dn); }, n_angle, n_radial);
  const double T = circle_mean_of([&](cplx z) { return std::pow(mixed(z), 0.5 * dn); }, n_angle);
  const double Q = circle_mean_of([&](cplx z) { return std::pow(std::abs(prod(z)), 0.5 * dn); }, n_angle);
  const double F = circle_mean_of([&](cplx z) { return std::pow(std::abs(map.value(z)), dn); }, n_angle);

  double holder = 0.0, real_part_sum = 0.0, boundary_sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    const double a = static_cast<double>(k) / n, b = static_cast<double>(n - k) / n;
    holder += binom * std::pow(X, a) * std::pow(R, b);
    real_part_sum += binom * std::pow(e, n - k) * std::pow(X, a) * std::pow(P, b);
    boundary_sum += binom * std::pow(e, n - k) * std::pow(T, 2.0 * a) * std::pow(Q, 2.0 * b);
  }
  const double collapsed = std::pow(1.0 + e, dn) * T * T;
  const double s = std::sin(pi / (4.0 * n));
  const double final_bound = std::pow(4.0 * s * s, -dn) * F * F;
  return {L, holder, real_part_sum, boundary_sum, collapsed, final_bound};
}

bool chain_monotone(std::span<const double> chain, double tol) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i] < chain[i - 1] * (1.0 - tol)) return false;
  return true;
}

VerificationReport verify_ipl(const TaylorPoly& a, const TaylorPoly& b, double p, double tol) {
  Stopwatch clock;
  VerificationReport report = make_report(TheoremId::IPL, p, tol);
  const HarmonicMap pair{a, b};
  record(report, 0.0, theorem_sides(TheoremId::IPL, pair, p), tol);
  report.grid = {{"samples", 1.0}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::vector<double> sharpness_probe(TheoremId id, double p, std::span<const double> fractions,
                                    const QuadratureSpec& spec) {
  if (id != TheoremId::PRENTE && id != TheoremId::VER2 && id != TheoremId::VER3)
    throw std::invalid_argument("sharpness_probe: PRENTE, VER2 or VER3 expected");
  const bool ok = id == TheoremId::PRENTE ? (p > 1.0 && p < 2.0) : (p > 1.0 && p <= 2.0);
  if (!ok) throw DomainError("sharpness_probe: p outside the Calderon regime");
  std::vector<double> out;
  for (double f : fractions) {
    if (!(f > 0.0 && f < 1.0)) throw std::invalid_argument("sharpness_probe: fractions must lie in (0, 1)");
    const ExtremalParams params(f * pi / (2.0 * p), p);
    const double u = calderon_norm(params, CalderonPart::Real, spec);
    switch (id) {
      case TheoremId::PRENTE: out.push_back(calderon_norm(params, CalderonPart::Imag, spec) / u); break;
      case TheoremId::VER2: out.push_back(calderon_norm(params, CalderonPart::Full, spec) / u); break;
      default:
        out.push_back(calderon_norm(params, CalderonPart::Imag, spec) /
                      calderon_norm(params, CalderonPart::Full, spec));
        break;
    }
  }
  return out;
}

VerificationReport probe_report(TheoremId id, double p, std::span<const double> fractions, double tol) {
  Stopwatch clock;
  VerificationReport report;
  report.id = "PROBE:" + std::string(info(id).name);
  report.p = p;
  report.tolerance = tol;
  report.constant = theorem_constant(id, p);
  report.ratios = sharpness_probe(id, p, fractions);
  for (std::size_t i = 0; i < report.ratios.size(); ++i) {
    const double r = report.ratios[i];
    report.ratio_max = std::max(report.ratio_max.value_or(0.0), r);
    const double slack = 1.0 - r / *report.constant;
    report.observe(slack, {fractions[i]});
    if (r > *report.constant * (1.0 + tol)) report.add_violation({fractions[i], r}, slack);
    if (i > 0 && fractions[i] > fractions[i - 1] && !(r > report.ratios[i - 1]))
      report.add_violation({fractions[i], r}, r - report.ratios[i - 1]);
  }
  report.grid = {{"fractions", static_cast<double>(fractions.size())}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace rieszlab
