#include "rieszlab/inequality_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "rieszlab/error.hpp"
#include "rieszlab/quadrature.hpp"

namespace rieszlab {

using std::numbers::pi;

namespace {

constexpr double kMaxExponent = 64.0;

constexpr std::array<InequalityInfo, 16> kInfo = {{
    {InequalityId::FSH, "FSH", SlackShape::TwoVariable, {1.0, 2.0, true, false}, -2 * pi, 2 * pi, false},
    {InequalityId::POSA, "POSA", SlackShape::TwoVariable, {1.0, 2.0, true, true}, -pi, pi, false},
    {InequalityId::ALE, "ALE", SlackShape::TwoVariable, {4.0, kMaxExponent, false, false}, -2 * pi, 2 * pi, false},
    {InequalityId::ALE1, "ALE1", SlackShape::TwoVariable, {2.0, 4.0, false, false}, -2 * pi, 2 * pi, false},
    {InequalityId::L2, "L2", SlackShape::TwoVariable, {2.0, kMaxExponent, true, false}, -2 * pi, 2 * pi, false},
    {InequalityId::ARI, "ARI", SlackShape::TwoVariable, {2.0, kMaxExponent, true, false}, -2 * pi, 2 * pi, false},
    {InequalityId::VANESA, "VANESA", SlackShape::TwoVariable, {1.0, 2.0, true, true}, -pi, pi, false},
    {InequalityId::VERSI, "VERSI", SlackShape::Angle, {1.0, 2.0, true, false}, -0.5 * pi, 0.5 * pi, false},
    {InequalityId::CONTI_1, "CONTI_1", SlackShape::Angle, {0.0, kMaxExponent, true, false}, 0.0, 0.25 * pi, true},
    {InequalityId::CONTI_2, "CONTI_2", SlackShape::Angle, {0.0, kMaxExponent, true, false}, 0.0, 0.25 * pi, true},
    {InequalityId::LPE_X, "LPE_X", SlackShape::Exponent, {1.0, 2.0, false, false}, 0.0, 0.0, false},
    {InequalityId::LPE_Y, "LPE_Y", SlackShape::Exponent, {1.0, 2.0, false, true}, 0.0, 0.0, false},
    {InequalityId::HARD_PRIMA, "HARD_PRIMA", SlackShape::Exponent, {4.0, kMaxExponent, false, false}, 0.0, 0.0, false},
    {InequalityId::HARD_SECONDA1, "HARD_SECONDA1", SlackShape::Exponent, {4.0, kMaxExponent, false, false}, 0.0, 0.0, false},
    {InequalityId::HARD_SAME, "HARD_SAME", SlackShape::Exponent, {4.0, kMaxExponent, false, false}, 0.0, 0.0, false},
    {InequalityId::HARD_HARDY, "HARD_HARDY", SlackShape::Exponent, {4.0, kMaxExponent, false, false}, 0.0, 0.0, false},
}};

constexpr std::array<InequalityId, 16> kIds = {
    InequalityId::FSH,        InequalityId::POSA,    InequalityId::ALE,          InequalityId::ALE1,
    InequalityId::L2,         InequalityId::ARI,     InequalityId::VANESA,       InequalityId::VERSI,
    InequalityId::CONTI_1,    InequalityId::CONTI_2, InequalityId::LPE_X,        InequalityId::LPE_Y,
    InequalityId::HARD_PRIMA, InequalityId::HARD_SECONDA1, InequalityId::HARD_SAME, InequalityId::HARD_HARDY};

double principal(double theta) {
  double t = std::remainder(theta, 2.0 * pi);
  if (t == -pi) t = pi;
  return t;
}

void require_p(InequalityId id, double p) {
  const InequalityInfo& in = info(id);
  if (!in.p_range.contains(p))
    throw DomainError(std::string(in.name) + ": p = " + std::to_string(p) + " outside " +
                      in.p_range.describe());
}

// Two-variable inequality in reduced form
//   slack = k1·A(r, t) - k2·r^{p/2}·m(t) - B(r, t)
// with A, B one of (|z + w̄|^p, (|z|²+|w|²)^{p/2}) depending on the side the
// sharp constant multiplies.
struct Kernel {
  InequalityId id;
  double p;
  double hp;
  double k1 = 0.0;
  double k2 = 0.0;

  Kernel(InequalityId which, double exponent) : id(which), p(exponent), hp(0.5 * exponent) {
    if (info(id).shape != SlackShape::TwoVariable)
      throw std::invalid_argument(std::string(info(id).name) + " is not a two-variable inequality");
    require_p(id, p);
    switch (id) {
      case InequalityId::FSH:
        k1 = sharp_constant(ConstantKind::ALemmaNice, p);
        k2 = sharp_constant(ConstantKind::BLemmaNice, p);
        break;
      case InequalityId::POSA:
        k1 = 1.0 / (1.0 + std::cos(pi / p));
        k2 = std::pow(2.0, hp) * std::tan(pi / (2.0 * p));
        break;
      case InequalityId::ALE:
      case InequalityId::ALE1:
        k1 = sharp_constant(ConstantKind::ALemmaHard, p);
        k2 = sharp_constant(ConstantKind::BLemmaHard, p);
        break;
      case InequalityId::L2:
        k1 = sharp_constant(ConstantKind::CLemmaL2, p);
        k2 = sharp_constant(ConstantKind::DLemmaL2, p);
        break;
      case InequalityId::ARI:
        k1 = std::pow(2.0, hp) * std::pow(std::cos(pi / (2.0 * p)), p);
        k2 = sharp_constant(ConstantKind::DLemmaL2, p);
        break;
      case InequalityId::VANESA:
        k1 = sharp_constant(ConstantKind::CVanesa, p);
        k2 = sharp_constant(ConstantKind::DVanesa, p);
        break;
      default:
        break;
    }
  }

  // Angular factor m(t) multiplying r^{p/2}.
  double angular(double t) const {
    switch (id) {
      case InequalityId::FSH: return re_branch_power_polar(1.0, t, p);
      case InequalityId::POSA: return std::cos(hp * t);
      case InequalityId::ALE: return theta_hard_phi(t - 0.5 * pi, p);
      case InequalityId::ALE1: return theta_hard_conj(t, p);
      case InequalityId::L2:
      case InequalityId::ARI: return theta_one(t, p);
      case InequalityId::VANESA: return std::cos(hp * (pi - std::abs(principal(t))));
      default: return 0.0;
    }
  }

  // Slack from precomputed pieces: sum_sq = |z + w̄|², mod_sq = |z|² + |w|²,
  // prod_hp = |zw|^{p/2}. Also returns the size of the largest term.
  double eval(double sum_sq, double mod_sq, double prod_hp, double m, double* scale = nullptr) const {
    double plus = 0.0, minus = 0.0;
    switch (id) {
      case InequalityId::FSH:
      case InequalityId::ALE:
      case InequalityId::ALE1:
        plus = k1 * std::pow(sum_sq, hp);
        minus = std::pow(mod_sq, hp);
        break;
      case InequalityId::POSA:
        plus = std::pow(sum_sq * k1, hp);
        minus = std::pow(mod_sq, hp);
        break;
      case InequalityId::L2:
      case InequalityId::ARI:
      case InequalityId::VANESA:
        plus = k1 * std::pow(mod_sq, hp);
        minus = std::pow(sum_sq, hp);
        break;
      default:
        break;
    }
    const double middle = k2 * prod_hp * m;
    if (scale) *scale = std::max({std::abs(plus), std::abs(middle), std::abs(minus)});
    return plus - middle - minus;
  }
};

double kernel_slack(const Kernel& k, double r, double t) {
  const double mod_sq = 1.0 + r * r;
  const double sum_sq = mod_sq + 2.0 * r * std::cos(t);
  return k.eval(sum_sq, mod_sq, std::pow(r, k.hp), k.angular(t));
}

void validate_r(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("reduced ratio r must lie in (0, 1]");
}

// Coefficient y shared by the HARD_* inequalities.
double hard_y(double p) { return 1.0 - std::pow(1.0 - std::cos(pi / p), p / (p - 2.0)); }

std::vector<double> spread(const ParamRange& range, int count, bool logarithmic) {
  const int denom = count - 1 + (range.lo_open ? 1 : 0) + (range.hi_open ? 1 : 0);
  const int offset = range.lo_open ? 1 : 0;
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i + offset) / denom;
    out.push_back(logarithmic ? range.lo * std::pow(range.hi / range.lo, f)
                              : range.lo + (range.hi - range.lo) * f);
  }
  return out;
}

// Per-worker result of a grid scan, merged in row order for determinism.
struct Partial {
  double min = std::numeric_limits<double>::infinity();
  std::vector<double> argmin;
  std::vector<Violation> violations;
  std::size_t count = 0;
};

void merge(VerificationReport& report, const Partial& part) {
  if (!part.argmin.empty()) report.observe(part.min, part.argmin);
  for (const Violation& v : part.violations) {
    if (report.violations.size() < VerificationReport::kStoredViolations) report.violations.push_back(v);
  }
  report.violation_count += part.count;
}

void note(Partial& part, double value, double a, double b, double tol, bool two) {
  if (value < part.min) {
    part.min = value;
    part.argmin = two ? std::vector<double>{a, b} : std::vector<double>{a};
  }
  if (value < -tol) {
    ++part.count;
    if (part.violations.size() < VerificationReport::kStoredViolations)
      part.violations.push_back({two ? std::vector<double>{a, b} : std::vector<double>{a}, value});
  }
}

unsigned worker_count(std::size_t work_items) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(1, work_items)));
}

// Runs body(begin, end, partial) over contiguous chunks of [0, n).
template <class Body>
std::vector<Partial> run_chunks(std::size_t n, Body body) {
  const unsigned workers = worker_count(n / 64);
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    if (workers == 1) {
      body(begin, end, parts[w]);
    } else {
      threads.emplace_back([&, begin, end, w] { body(begin, end, parts[w]); });
    }
  }
  for (auto& t : threads) t.join();
  return parts;
}

std::vector<double> axis_nodes(const InequalityInfo& in, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    xs[static_cast<std::size_t>(j)] =
        in.axis_lo_open ? in.axis_lo + (in.axis_hi - in.axis_lo) * (j + 1) / n
                        : in.axis_lo + (in.axis_hi - in.axis_lo) * j / (n - 1);
  }
  return xs;
}

std::vector<double> exponent_nodes(InequalityId id, double p, int n) {
  const InequalityInfo& in = info(id);
  const bool logarithmic = in.p_range.hi == kMaxExponent;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const double f = in.p_range.hi_open ? static_cast<double>(i) / n : static_cast<double>(i) / (n - 1);
    xs.push_back(logarithmic ? in.p_range.lo * std::pow(in.p_range.hi / in.p_range.lo, f)
                             : in.p_range.lo + (in.p_range.hi - in.p_range.lo) * f);
  }
  xs.push_back(p);
  return xs;
}

void scan_two_variable(VerificationReport& report, InequalityId id, double p, const GridSpec& grid) {
  const Kernel k(id, p);
  const InequalityInfo& in = info(id);
  const int nr = grid.n_r, nt = grid.n_t;
  const double dt = (in.axis_hi - in.axis_lo) / (nt - 1);
  std::vector<double> ts(nt), cs(nt), ms(nt);
  for (int j = 0; j < nt; ++j) {
    ts[j] = in.axis_lo + dt * j;
    cs[j] = std::cos(ts[j]);
    ms[j] = k.angular(ts[j]);
  }
  const double tol = grid.tolerance;
  auto parts = run_chunks(static_cast<std::size_t>(nr), [&](std::size_t begin, std::size_t end, Partial& part) {
    for (std::size_t i = begin; i < end; ++i) {
      const double r = static_cast<double>(i + 1) / nr;
      const double mod_sq = 1.0 + r * r;
      const double r_hp = std::pow(r, k.hp);
      for (int j = 0; j < nt; ++j) {
        double scale = 0.0;
        const double raw = k.eval(mod_sq + 2.0 * r * cs[j], mod_sq, r_hp, ms[j], &scale);
        note(part, raw / scale, r, ts[j], tol, true);
      }
    }
  });
  for (const Partial& part : parts) merge(report, part);

  // Local refinement: refine_nodes² points over the cells around the minimum.
  const double r0 = report.argmin[0], t0 = report.argmin[1];
  const double dr = 1.0 / nr;
  const double rlo = std::max(dr * 1e-3, r0 - dr), rhi = std::min(1.0, r0 + dr);
  const double tlo = std::max(in.axis_lo, t0 - dt), thi = std::min(in.axis_hi, t0 + dt);
  const int m = grid.refine_nodes;
  Partial refine;
  for (int a = 0; a < m; ++a) {
    const double r = rlo + (rhi - rlo) * a / (m - 1);
    for (int b = 0; b < m; ++b) {
      const double t = tlo + (thi - tlo) * b / (m - 1);
      note(refine, normalized_slack(id, p, r, t), r, t, tol, true);
    }
  }
  merge(report, refine);

  report.grid = {{"n_r", nr},
                 {"n_t", nt},
                 {"refine_nodes", m},
                 {"t_lo", in.axis_lo},
                 {"t_hi", in.axis_hi},
                 {"normalized", 1.0}};
}

void scan_one_variable(VerificationReport& report, InequalityId id, double p, const GridSpec& grid) {
  const InequalityInfo& in = info(id);
  const bool angle = in.shape == SlackShape::Angle;
  const std::vector<double> xs = angle ? axis_nodes(in, grid.n_1d) : exponent_nodes(id, p, grid.n_1d);
  const double tol = grid.tolerance;
  auto parts = run_chunks(xs.size(), [&](std::size_t begin, std::size_t end, Partial& part) {
    for (std::size_t i = begin; i < end; ++i) note(part, slack_1d(id, p, xs[i]), xs[i], 0.0, tol, false);
  });
  for (const Partial& part : parts) merge(report, part);

  // Refinement between the neighbours of the minimizing node.
  const double x0 = report.argmin[0];
  const auto it = std::lower_bound(xs.begin(), xs.end() - (angle ? 0 : 1), x0);
  const std::size_t idx = static_cast<std::size_t>(it - xs.begin());
  const std::size_t last = xs.size() - (angle ? 1 : 2);
  const double lo = xs[idx == 0 ? 0 : idx - 1];
  const double hi = xs[std::min(idx + 1, last)];
  Partial refine;
  const int m = grid.refine_nodes;
  for (int a = 0; a < m; ++a) {
    const double x = lo + (hi - lo) * a / (m - 1);
    if (in.shape == SlackShape::Exponent && !in.p_range.contains(x)) continue;
    if (angle && in.axis_lo_open && x <= in.axis_lo) continue;
    note(refine, slack_1d(id, p, x), x, 0.0, tol, false);
  }
  merge(report, refine);

  if (angle) {
    report.grid = {{"n_1d", grid.n_1d}, {"refine_nodes", m}, {"x_lo", in.axis_lo}, {"x_hi", in.axis_hi}};
  } else {
    report.grid = {{"n_1d", grid.n_1d},
                   {"refine_nodes", m},
                   {"p_lo", in.p_range.lo},
                   {"p_hi", in.p_range.hi}};
  }
}

// Coarse-to-fine minimization on a box, `passes` zoom levels.
EqualityPoint minimize_2d(InequalityId id, double p) {
  const InequalityInfo& in = info(id);
  double rlo = 0.0, rhi = 1.0, tlo = in.axis_lo, thi = in.axis_hi;
  int nr = 400, nt = 800;
  EqualityPoint best{{1.0, 0.0}, std::numeric_limits<double>::infinity()};
  for (int pass = 0; pass < 3; ++pass) {
    const double dr = (rhi - rlo) / nr, dt = (thi - tlo) / (nt - 1);
    for (int i = 1; i <= nr; ++i) {
      const double r = rlo + dr * i;
      for (int j = 0; j < nt; ++j) {
        const double t = tlo + dt * j;
        const double s = normalized_slack(id, p, r, t);
        if (s < best.slack) best = {{r, t}, s};
      }
    }
    const double r0 = best.params[0], t0 = best.params[1];
    rlo = std::max(0.0, r0 - dr);
    rhi = std::min(1.0, r0 + dr);
    tlo = std::max(in.axis_lo, t0 - dt);
    thi = std::min(in.axis_hi, t0 + dt);
    nr = 512;
    nt = 512;
  }
  return best;
}

EqualityPoint minimize_1d(InequalityId id, double p) {
  const InequalityInfo& in = info(id);
  const bool angle = in.shape == SlackShape::Angle;
  double lo = angle ? in.axis_lo : in.p_range.lo;
  double hi = angle ? in.axis_hi : in.p_range.hi;
  int n = 4000;
  EqualityPoint best{{lo}, std::numeric_limits<double>::infinity()};
  for (int pass = 0; pass < 3; ++pass) {
    const double dx = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double x = lo + dx * i;
      if (angle ? (in.axis_lo_open && x <= in.axis_lo) : !in.p_range.contains(x)) continue;
      const double s = slack_1d(id, p, x);
      if (s < best.slack) best = {{x}, s};
    }
    const double x0 = best.params[0];
    lo = std::max(angle ? in.axis_lo : in.p_range.lo, x0 - dx);
    hi = std::min(angle ? in.axis_hi : in.p_range.hi, x0 + dx);
    n = 512;
  }
  return best;
}

// Angles in [φ0, φ0 + 2π) where the circle |ζ - c| = ρ meets the ray arg ζ = θ.
void ray_crossings(cplx c, double rho, double theta, std::vector<double>& out) {
  const cplx dir = std::polar(1.0, theta);
  const double b = (c * std::conj(dir)).real();
  const double disc = b * b - std::norm(c) + rho * rho;
  if (disc < 0.0) return;
  const double root = std::sqrt(disc);
  for (double s : {b - root, b + root}) {
    if (s > 0.0) out.push_back(std::arg(s * dir - c));
  }
}

// Adaptive mean of g over φ in [0, 2π) with the given interior cut angles.
double adaptive_circle_mean(const std::function<double(double)>& g, std::vector<double> cuts, double scale) {
  for (double& c : cuts) {
    c = std::fmod(c, 2.0 * pi);
    if (c < 0.0) c += 2.0 * pi;
  }
  std::sort(cuts.begin(), cuts.end());
  const double start = cuts.empty() ? 0.0 : cuts.front();
  std::vector<double> inner;
  for (double c : cuts) {
    const double shifted = c <= start ? c + 2.0 * pi : c;
    if (shifted > start + 1e-14 && shifted < start + 2.0 * pi - 1e-14) inner.push_back(shifted);
  }
  // Eight uniform panels keep oscillatory profiles from being under-resolved.
  for (int k = 1; k < 8; ++k) inner.push_back(start + k * pi / 4.0);
  std::sort(inner.begin(), inner.end());
  const QuadResult q =
      integrate_adaptive(g, start, start + 2.0 * pi, 1e-15 * scale, 1e-14, 20000, inner);
  return q.value / (2.0 * pi);
}

double minorant_scale(double radius, double p) { return std::max(1.0, std::pow(radius, 0.5 * p)); }

}  // namespace

std::span<const InequalityId> all_inequalities() { return kIds; }

const InequalityInfo& info(InequalityId id) { return kInfo[static_cast<std::size_t>(id)]; }

std::optional<InequalityId> inequality_from_string(std::string_view name) {
  for (const InequalityInfo& in : kInfo)
    if (in.name == name) return in.id;
  return std::nullopt;
}

std::vector<double> sample_exponents(InequalityId id) {
  const InequalityInfo& in = info(id);
  if (id == InequalityId::CONTI_1 || id == InequalityId::CONTI_2) return {2.0};
  return spread(in.p_range, 8, in.p_range.hi == kMaxExponent);
}

double slack(InequalityId id, double p, double r, double t) {
  validate_r(r);
  return kernel_slack(Kernel(id, p), r, t);
}

double normalized_slack(InequalityId id, double p, double r, double t) {
  validate_r(r);
  const Kernel k(id, p);
  const double mod_sq = 1.0 + r * r;
  double scale = 0.0;
  const double raw = k.eval(mod_sq + 2.0 * r * std::cos(t), mod_sq, std::pow(r, k.hp), k.angular(t), &scale);
  return raw / scale;
}

double slack_complex(InequalityId id, double p, cplx z, cplx w) {
  const Kernel k(id, p);
  const cplx zeta = z * w;
  const double phase = zeta == cplx{} ? 0.0 : std::arg(zeta);
  double m = 0.0;
  switch (id) {
    case InequalityId::FSH: m = std::cos(k.hp * phase); break;
    case InequalityId::ALE: m = theta_hard_phi(phase - 0.5 * pi, p); break;
    default: m = k.angular(phase); break;
  }
  return k.eval(std::norm(z + std::conj(w)), std::norm(z) + std::norm(w), std::pow(std::abs(zeta), k.hp), m);
}

double slack_1d(InequalityId id, double p, double x) {
  switch (id) {
    case InequalityId::VERSI: {
      require_p(id, p);
      if (std::abs(x) > 0.5 * pi) throw DomainError("VERSI: x must lie in [-π/2, π/2]");
      const double a = sharp_constant(ConstantKind::VersiA, p);
      const double b = sharp_constant(ConstantKind::VersiB, p);
      return a * std::pow(std::max(0.0, std::cos(x)), p) - b * std::cos(p * x) - 1.0;
    }
    case InequalityId::CONTI_1: {
      if (!(x > 0.0 && x <= 0.25 * pi)) throw DomainError("CONTI_1: x must lie in (0, π/4]");
      const double s = std::sin(x);
      return 1.0 + 1.0 / (x * x) - 1.0 / (s * s);
    }
    case InequalityId::CONTI_2:
      if (!(x > 0.0 && x <= 0.25 * pi)) throw DomainError("CONTI_2: x must lie in (0, π/4]");
      return 1.0 / std::tan(x) - (1.0 / x - 0.5 * x);
    default:
      break;
  }
  if (info(id).shape == SlackShape::TwoVariable)
    throw std::invalid_argument(std::string(info(id).name) + " is a two-variable inequality");
  // Exponent tags: x is the exponent.
  require_p(id, x);
  const double q = x, hq = 0.5 * x;
  switch (id) {
    case InequalityId::LPE_X:
      return 1.0 - std::pow(std::sin(pi / q), hq) * std::pow(1.0 / std::tan(pi / (2.0 * q)), 1.0 - hq);
    case InequalityId::LPE_Y: {
      const double u = std::pow(std::sqrt(2.0) * std::sin(pi / (2.0 * q)), 2.0 * q / (q - 2.0));
      return std::pow(u / (1.0 - u), 0.5 * (q - 2.0)) - 1.0;
    }
    case InequalityId::HARD_PRIMA:
      return std::cos(pi / (2.0 * q)) - hard_y(q);
    case InequalityId::HARD_SECONDA1:
      return std::cos(hq * std::acos(hard_y(q))) - std::sin(pi / (2.0 * q));
    case InequalityId::HARD_SAME:
      return std::cos(hq * std::acos(hard_y(q))) / std::tan(pi / (2.0 * q)) - hard_y(q);
    case InequalityId::HARD_HARDY:
      return hard_y(q) - std::cos((pi - pi / q) / q);
    default:
      break;
  }
  throw std::invalid_argument(std::string(info(id).name) + " is a two-variable inequality");
}

void GridSpec::validate() const {
  if (n_r < 16 || n_t < 16 || n_1d < 16) throw std::invalid_argument("grid node counts must be at least 16");
  if (refine_nodes < 2) throw std::invalid_argument("refine_nodes must be at least 2");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw std::invalid_argument("tolerance must be positive");
}

VerificationReport verify_pointwise(InequalityId id, double p, const GridSpec& grid) {
  grid.validate();
  const InequalityInfo& in = info(id);
  require_p(id, p);
  Stopwatch clock;
  VerificationReport report;
  report.id = std::string(in.name);
  report.p = p;
  report.tolerance = grid.tolerance;
  if (in.shape == SlackShape::TwoVariable) {
    scan_two_variable(report, id, p, grid);
  } else {
    scan_one_variable(report, id, p, grid);
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

EqualityPoint locate_equality(InequalityId id, double p) {
  require_p(id, p);
  return info(id).shape == SlackShape::TwoVariable ? minimize_2d(id, p) : minimize_1d(id, p);
}

std::vector<double> equality_angles(InequalityId id, double p) {
  require_p(id, p);
  switch (id) {
    case InequalityId::FSH:
    case InequalityId::POSA:
    case InequalityId::L2:
    case InequalityId::ARI:
      return {pi / p, -pi / p};
    case InequalityId::ALE:
    case InequalityId::ALE1:
    case InequalityId::VANESA:
      return {pi - pi / p, -(pi - pi / p)};
    default:
      return {};
  }
}

VerificationReport homogeneity_scan(InequalityId id, double p, int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const Kernel k(id, p);
  const InequalityInfo& in = info(id);
  const bool periodic = in.axis_hi < 1.5 * pi;
  Stopwatch clock;
  VerificationReport report;
  report.id = "HOMOGENEITY:" + std::string(in.name);
  report.p = p;
  report.seed = seed;
  report.tolerance = tol;
  Rng rng(seed);
  double worst_mismatch = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx z = std::polar(rng.uniform(1e-3, 2.0), rng.uniform(-pi, pi));
    const cplx w = std::polar(rng.uniform(1e-3, 2.0), rng.uniform(-pi, pi));
    const double mod_sq = std::norm(z) + std::norm(w);
    const double full = slack_complex(id, p, z, w);
    const double big = std::max(std::abs(z), std::abs(w));
    const double r = std::min(std::abs(z), std::abs(w)) / big;
    double t = std::arg(z) + std::arg(w);
    if (periodic) t = principal(t);
    const double reduced = std::pow(big, p) * kernel_slack(k, r, t);
    double scale = 0.0;
    k.eval(std::norm(z + std::conj(w)), mod_sq, std::pow(std::abs(z * w), k.hp), k.angular(t), &scale);
    const double mismatch = std::abs(full - reduced) / std::max(scale, 1e-300);
    worst_mismatch = std::max(worst_mismatch, mismatch);
    const double normalized = full / std::max(scale, 1e-300);
    const std::vector<double> params{z.real(), z.imag(), w.real(), w.imag()};
    report.observe(normalized, params);
    if (normalized < -tol) report.add_violation(params, normalized);
    if (mismatch > 1e-10) report.add_violation(params, -mismatch);
  }
  report.grid = {{"samples", samples}, {"max_relative_mismatch", worst_mismatch}, {"normalized", 1.0}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

double circle_average(const std::function<double(cplx)>& f, cplx center, double rho,
                      std::span<const double> kink_rays) {
  if (!(rho > 0.0)) throw std::invalid_argument("circle radius must be positive");
  std::vector<double> cuts;
  for (double theta : kink_rays) ray_crossings(center, rho, theta, cuts);
  if (center != cplx{}) cuts.push_back(std::arg(-center));
  const double scale = std::max(1.0, std::abs(f(center)) + std::abs(f(center + rho)));
  return adaptive_circle_mean([&](double phi) { return f(center + std::polar(rho, phi)); }, cuts, scale);
}

VerificationReport check_submean_function(std::string_view id, const std::function<double(cplx)>& f,
                                          std::span<const double> kink_rays, int centers, int radii,
                                          int angles, std::uint64_t seed, double tol) {
  if (centers < 1 || radii < 1) throw std::invalid_argument("sub-mean: centers and radii must be positive");
  if (angles < 256) throw std::invalid_argument("sub-mean: at least 256 angles required");
  Stopwatch clock;
  VerificationReport report;
  report.id = std::string(id);
  report.seed = seed;
  report.tolerance = tol;
  Rng rng(seed);
  double trapezoid_min = std::numeric_limits<double>::infinity();
  for (int c = 0; c < centers; ++c) {
    const cplx z0 = c == 0 ? cplx{} : 2.0 * rng.unit_disk();
    const double f0 = f(z0);
    for (int k = 0; k < radii; ++k) {
      const double rho = c == 0 ? rng.uniform(1e-3, 2.0) : std::abs(z0) * rng.uniform(1e-3, 1.0);
      double size = 0.0;
      const double trap = circle_mean(
          [&](double phi) {
            const double v = f(z0 + std::polar(rho, phi));
            size = std::max(size, std::abs(v));
            return v;
          },
          angles);
      const double scale = std::max({1.0, size, std::abs(f0)});
      const double avg = circle_average(f, z0, rho, kink_rays);
      const double deficit = (avg - f0) / scale;
      trapezoid_min = std::min(trapezoid_min, (trap - f0) / scale);
      const std::vector<double> params{z0.real(), z0.imag(), rho};
      report.observe(deficit, params);
      if (deficit < -tol) report.add_violation(params, deficit);
    }
  }
  report.grid = {{"centers", centers},
                 {"radii", radii},
                 {"angles", angles},
                 {"trapezoid_min_deficit", trapezoid_min},
                 {"normalized", 1.0}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_submean(MinorantId id, double p, int centers, int radii, int angles,
                                 std::uint64_t seed, double tol) {
  if (is_two_variable(id)) throw std::invalid_argument("check_submean: use check_pluri_lines for two-variable minorants");
  if (!validity(id).contains(p) || (id == MinorantId::Psi && p == 2.0))
    throw DomainError(std::string(to_string(id)) + ": p outside " + validity(id).describe());
  const std::vector<double> rays = angular_breakpoints(p);
  auto f = [id, p](cplx zeta) { return minorant_value(id, zeta, p); };
  VerificationReport report = check_submean_function(to_string(id), f, rays, centers, radii, angles, seed, tol);
  report.p = p;

  // At the origin the mean is known independently of the adaptive rule.
  Stopwatch clock;
  for (double rho : {0.5, 1.0, 2.0}) {
    const double avg = circle_average(f, cplx{}, rho, rays);
    const double reference = closed_form_origin_mean(id, p, rho).value_or(origin_circle_mean(id, p, rho));
    const double err = std::abs(avg - reference) / minorant_scale(rho, p);
    if (err > tol) report.add_violation({0.0, 0.0, rho}, -err);
  }
  report.elapsed_ms += clock.elapsed_ms();
  return report;
}

VerificationReport check_pluri_lines(MinorantId id, double p, int n_lines, std::uint64_t seed, double tol,
                                     int radii, int angles) {
  if (!is_two_variable(id)) throw std::invalid_argument("check_pluri_lines: F_CAL or G_CAL expected");
  if (!validity(id).contains(p) || (id == MinorantId::GCal && p == 2.0))
    throw DomainError(std::string(to_string(id)) + ": p outside " + validity(id).describe());
  if (n_lines < 1 || radii < 1 || angles < 16) throw std::invalid_argument("pluri-line grid too small");
  Stopwatch clock;
  VerificationReport report;
  report.id = std::string(to_string(id));
  report.p = p;
  report.seed = seed;
  report.tolerance = tol;
  const std::vector<double> rays = angular_breakpoints(p);
  auto F = [id, p](cplx z, cplx w) { return id == MinorantId::FCal ? minorant_F(z, w, p) : minorant_G(z, w, p); };
  Rng rng(seed);
  for (int line = 0; line < n_lines; ++line) {
    const cplx z0 = 1.5 * rng.unit_disk(), w0 = 1.5 * rng.unit_disk();
    const cplx w1 = 1.5 * rng.unit_disk(), w2 = 1.5 * rng.unit_disk();
    const double u0 = F(z0, w0);
    for (int k = 0; k < radii; ++k) {
      const double rho = rng.uniform(1e-3, 1.0);
      auto zeta = [&](double phi) {
        const cplx t = std::polar(rho, phi);
        return (z0 + t * w1) * (w0 + t * w2);
      };
      auto g = [&](double phi) {
        const cplx t = std::polar(rho, phi);
        return F(z0 + t * w1, w0 + t * w2);
      };
      // Kinks of the restriction: arg ζ(φ) crossing a breakpoint ray, and
      // near-zeros of ζ.
      std::vector<double> cuts;
      const double h = 2.0 * pi / angles;
      std::vector<cplx> samples(static_cast<std::size_t>(angles) + 1);
      for (int j = 0; j <= angles; ++j) samples[j] = zeta(h * j);
      double size = std::abs(u0);
      for (int j = 0; j < angles; ++j) size = std::max(size, std::pow(std::abs(samples[j]), 0.5 * p));
      for (double theta : rays) {
        const cplx rot = std::polar(1.0, -theta);
        for (int j = 0; j < angles; ++j) {
          const cplx a = samples[j] * rot, b = samples[j + 1] * rot;
          if ((a.imag() > 0.0) == (b.imag() > 0.0) || (a.real() <= 0.0 && b.real() <= 0.0)) continue;
          double lo = h * j, hi = h * (j + 1);
          const bool lo_positive = a.imag() > 0.0;
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (((zeta(mid) * rot).imag() > 0.0) == lo_positive) {
              lo = mid;
            } else {
              hi = mid;
            }
          }
          cuts.push_back(0.5 * (lo + hi));
        }
      }
      for (int j = 0; j < angles; ++j) {
        const double prev = std::abs(samples[(j + angles - 1) % angles]);
        const double cur = std::abs(samples[j]), next = std::abs(samples[j + 1]);
        if (cur <= prev && cur <= next) cuts.push_back(h * j);
      }
      const double scale = std::max(1.0, size);
      const double avg = adaptive_circle_mean(g, cuts, scale);
      const double deficit = (avg - u0) / scale;
      const std::vector<double> params{z0.real(), z0.imag(), w0.real(), w0.imag(),
                                       w1.real(), w1.imag(), w2.real(), w2.imag(), rho};
      report.observe(deficit, params);
      if (deficit < -tol) report.add_violation(params, deficit);
    }
  }
  report.grid = {{"lines", n_lines}, {"radii", radii}, {"angles", angles}, {"normalized", 1.0}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

double origin_circle_mean(MinorantId id, double p, double rho) {
  if (is_two_variable(id)) throw std::invalid_argument("origin_circle_mean: one-variable minorant expected");
  if (!(rho > 0.0)) throw std::invalid_argument("origin_circle_mean: radius must be positive");
  const std::vector<double> rays = angular_breakpoints(p);
  std::vector<double> inner;
  for (double a : rays)
    if (a > -pi && a < pi) inner.push_back(a);
  const QuadResult q = integrate_adaptive([&](double t) { return minorant_angular(id, t, p); }, -pi, pi,
                                          1e-16, 1e-15, 20000, inner);
  return std::pow(rho, 0.5 * p) * q.value / (2.0 * pi);
}

std::optional<double> closed_form_origin_mean(MinorantId id, double p, double rho) {
  const double base = 2.0 / (p * pi) * std::sin(0.5 * p * pi) * std::pow(rho, 0.5 * p);
  switch (id) {
    case MinorantId::ReBranch: return base;
    case MinorantId::PhiMid: return -base;
    case MinorantId::Psi:
      if (p < 2.0) return base;
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace rieszlab
