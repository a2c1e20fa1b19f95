#include "rieszlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rieszlab/error.hpp"
#include "rieszlab/quadrature.hpp"

namespace rieszlab {

using std::numbers::pi;

namespace {
constexpr cplx kMinusI{0.0, -1.0};
}

FourierSeries periodic_hilbert(const FourierSeries& series) {
  FourierSeries out(series.degree());
  for (int k = -series.degree(); k <= series.degree(); ++k) {
    const cplx multiplier = k >= 0 ? kMinusI : -kMinusI;
    out.set(k, multiplier * series[k]);
  }
  return out;
}

cplx singular_hilbert_at(const FourierSeries& series, double tau, double epsilon,
                         const SingularOptions& options) {
  if (!(epsilon > 0.0 && epsilon < pi)) throw DomainError("singular_hilbert_at: epsilon must lie in (0, pi)");
  auto kernel = [&](double t) {
    return (series(tau + t) - series(tau - t)) / (2.0 * std::tan(0.5 * t));
  };
  double scale = 0.0;
  for (const auto& [k, c] : series.nonzero())
    if (k != 0) scale += std::abs(c) * std::abs(k);
  const double abs_tol = 1e-15 * std::max(scale, 1e-300);
  const QuadResult re =
      integrate_adaptive([&](double t) { return kernel(t).real(); }, epsilon, pi, abs_tol, options.rel_tol);
  const QuadResult im =
      integrate_adaptive([&](double t) { return kernel(t).imag(); }, epsilon, pi, abs_tol, options.rel_tol);
  cplx integral{re.value, im.value};
  if (options.arc_correction) integral += epsilon * kernel(epsilon);
  return -integral / pi;
}

HarmonicMap conjugate_map(const HarmonicMap& map) {
  const HarmonicMap m = map.normalized();
  return {m.g.scaled(kMinusI), m.h.scaled(kMinusI)};
}

std::string to_string(LinePairKind kind) {
  switch (kind) {
    case LinePairKind::PoissonKernel: return "POISSON_KERNEL";
    case LinePairKind::Indicator: return "INDICATOR";
    case LinePairKind::Lorentzian: return "LORENTZIAN";
  }
  return "LORENTZIAN";
}

std::vector<double> LinePair::breakpoints() const {
  if (kind == LinePairKind::Indicator) return {-1.0, 1.0};
  return {0.0};
}

std::pair<double, double> line_pair_values(const LinePair& pair, double x) {
  switch (pair.kind) {
    case LinePairKind::PoissonKernel: {
      const double y = pair.height;
      if (!(y > 0.0)) throw DomainError("POISSON_KERNEL: height must be positive");
      const double d = pi * (x * x + y * y);
      return {y / d, x / d};
    }
    case LinePairKind::Lorentzian: {
      const double d = 1.0 + x * x;
      return {1.0 / d, x / d};
    }
    case LinePairKind::Indicator: {
      if (x == 1.0 || x == -1.0) throw DomainError("INDICATOR: transform undefined at x = ±1");
      const double phi = std::abs(x) < 1.0 ? 1.0 : 0.0;
      return {phi, std::log(std::abs(x + 1.0) / std::abs(x - 1.0)) / pi};
    }
  }
  return {0.0, 0.0};
}

double line_hilbert_pv(const std::function<double(double)>& phi, double x,
                       std::span<const double> breakpoints) {
  auto odd_part = [&](double t) { return (phi(x + t) - phi(x - t)) / t; };
  std::vector<double> cuts;
  double reach = 1.0;
  for (double b : breakpoints) {
    cuts.push_back(std::abs(b - x));
    reach = std::max(reach, 2.0 * std::abs(b - x));
  }
  const QuadResult near = integrate_adaptive(odd_part, 0.0, reach, 1e-15, 1e-13, 20000, cuts);
  // t = reach/u maps [reach, ∞) onto (0, 1].
  const QuadResult far = integrate_adaptive(
      [&](double u) { return (phi(x + reach / u) - phi(x - reach / u)) / u; }, 0.0, 1.0, 1e-15, 1e-13,
      20000);
  return -(near.value + far.value) / pi;
}

double line_lp_norm(const std::function<double(double)>& phi, double p,
                    std::span<const double> breakpoints) {
  if (!(p > 0.0)) throw DomainError("line_lp_norm: p must be positive");
  auto power = [&](double x) { return std::pow(std::abs(phi(x)), p); };
  double lo = -1.0, hi = 1.0;
  for (double b : breakpoints) {
    lo = std::min(lo, b - 1.0);
    hi = std::max(hi, b + 1.0);
  }
  double total = integrate_adaptive(power, lo, hi, 1e-15, 1e-13, 20000, breakpoints).value;

  // Tails: x = edge ± (e^u - 1), integrated in unit chunks of u until the
  // chunks become negligible; the remaining geometric tail is added.
  for (double dir : {1.0, -1.0}) {
    const double edge = dir > 0.0 ? hi : lo;
    auto mapped = [&](double u) { return power(edge + dir * std::expm1(u)) * std::exp(u); };
    double previous = 0.0;
    for (double u = 0.0; u < 700.0; u += 4.0) {
      const double chunk = integrate_adaptive(mapped, u, u + 4.0, 1e-300, 1e-13, 4000).value;
      total += chunk;
      if (u > 0.0 && chunk < 1e-15 * total) {
        const double ratio = previous > 0.0 ? chunk / previous : 0.0;
        if (ratio < 1.0) total += chunk * ratio / (1.0 - ratio);
        break;
      }
      previous = chunk;
    }
  }
  return std::pow(total, 1.0 / p);
}

double empirical_hilbert_ratio(double p, std::span<const HarmonicMap> maps, const QuadratureSpec& spec) {
  if (maps.empty()) throw std::invalid_argument("empirical_hilbert_ratio: empty map list");
  double best = 0.0;
  for (const HarmonicMap& m : maps) {
    if (m.h.coeff(0) != cplx{}) throw std::invalid_argument("empirical_hilbert_ratio: maps must have h(0) = 0");
    const double base = hardy_norm(m, p, spec);
    if (base == 0.0) continue;
    best = std::max(best, hardy_norm(conjugate_map(m), p, spec) / base);
  }
  return best;
}

}  // namespace rieszlab
