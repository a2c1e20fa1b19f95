#include "rieszlab/norms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rieszlab/error.hpp"
#include "rieszlab/quadrature.hpp"

namespace rieszlab {

using std::numbers::pi;

void QuadratureSpec::validate() const {
  if (n_angle < 0 || n_radial < 0) throw std::invalid_argument("QuadratureSpec: negative node count");
  if (!(boundary_epsilon >= 0.0 && boundary_epsilon <= 1e-2))
    throw std::invalid_argument("QuadratureSpec: boundary_epsilon must lie in [0, 1e-2]");
  if (adaptive_depth < 1) throw std::invalid_argument("QuadratureSpec: adaptive_depth must be positive");
}

int angle_nodes(const QuadratureSpec& spec, std::size_t degree, double p) {
  const int deg = static_cast<int>(degree);
  if (spec.n_angle > 0) {
    if (spec.n_angle < 4 * deg + 1)
      throw std::invalid_argument("QuadratureSpec: n_angle must be at least 4*degree+1");
    return spec.n_angle;
  }
  const int exact = static_cast<int>(std::ceil(p)) * deg + 1;
  return std::max({2048, 4 * deg + 1, exact});
}

int radial_nodes(const QuadratureSpec& spec, std::size_t degree, double p) {
  if (spec.n_radial > 0) return spec.n_radial;
  const int deg = static_cast<int>(degree);
  return std::max(24, (static_cast<int>(std::ceil(p)) * deg + 2) / 2 + 1);
}

void check_norm_exponent(double p) {
  if (!(p > 1.0 && p <= 64.0)) throw DomainError("exponent p must lie in (1, 64]");
}

double circle_power_mean(const HarmonicMap& map, double q, double r, const QuadratureSpec& spec) {
  spec.validate();
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("power must be positive");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  const int n = angle_nodes(spec, map.degree(), q);
  const double half_q = 0.5 * q;
  return circle_mean(
      [&](double t) { return std::pow(std::norm(map.value(std::polar(r, t))), half_q); }, n);
}

double disk_power_mean(const HarmonicMap& map, double q, const QuadratureSpec& spec) {
  spec.validate();
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("power must be positive");
  const int nr = radial_nodes(spec, map.degree(), q);
  return gauss_integrate([&](double r) { return 2.0 * r * circle_power_mean(map, q, r, spec); },
                         0.0, 1.0, nr);
}

double circle_mixed_mean(const HarmonicMap& map, double q, double r, const QuadratureSpec& spec) {
  spec.validate();
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("power must be positive");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  const int n = angle_nodes(spec, map.degree(), q);
  const double half_q = 0.5 * q;
  return circle_mean(
      [&](double t) {
        const cplx z = std::polar(r, t);
        return std::pow(std::norm(map.g(z)) + std::norm(map.h(z)), half_q);
      },
      n);
}

double disk_mixed_mean(const HarmonicMap& map, double q, const QuadratureSpec& spec) {
  spec.validate();
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("power must be positive");
  const int nr = radial_nodes(spec, map.degree(), q);
  return gauss_integrate([&](double r) { return 2.0 * r * circle_mixed_mean(map, q, r, spec); },
                         0.0, 1.0, nr);
}

double mp_radius(const HarmonicMap& map, double p, double r, const QuadratureSpec& spec) {
  check_norm_exponent(p);
  return std::pow(circle_power_mean(map, p, r, spec), 1.0 / p);
}

double hardy_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec) {
  return mp_radius(map, p, 1.0, spec);
}

double triple_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec) {
  check_norm_exponent(p);
  return std::pow(circle_mixed_mean(map, p, 1.0, spec), 1.0 / p);
}

double bergman_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec) {
  check_norm_exponent(p);
  return std::pow(disk_power_mean(map, p, spec), 1.0 / p);
}

double bergman_triple_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec) {
  check_norm_exponent(p);
  return std::pow(disk_mixed_mean(map, p, spec), 1.0 / p);
}

namespace {

double component(cplx v, CalderonPart part) {
  switch (part) {
    case CalderonPart::Real: return std::abs(v.real());
    case CalderonPart::Imag: return std::abs(v.imag());
    case CalderonPart::Full: return std::abs(v);
  }
  return 0.0;
}

}  // namespace

double calderon_norm(const ExtremalParams& params, CalderonPart part, const QuadratureSpec& spec) {
  spec.validate();
  const double p = params.p();
  check_norm_exponent(p);
  // |g|^p ~ t^{-b} near the singular point; t = π s^κ with κ = 1/(1-b)
  // turns each half-circle integral into one with a bounded integrand.
  const double b = params.exponent() * p;
  const double kappa = 1.0 / (1.0 - b);
  constexpr double kTinyArc = 1e-200;
  const double s_floor = std::pow(kTinyArc / pi, 1.0 / kappa);

  auto integrand = [&](double s, bool upper) {
    s = std::max(s, s_floor);
    const double x = pi * std::exp(kappa * std::log(s));
    const double t = upper ? -x : x;
    const double f = std::pow(component(calderon_boundary(params, t), part), p);
    return f * kappa * pi * std::exp((kappa - 1.0) * std::log(s));
  };
  auto both_halves = [&](double a, double c) {
    double total = 0.0;
    for (bool upper : {false, true}) {
      const QuadResult q =
          integrate_adaptive([&](double s) { return integrand(s, upper); }, a, c, 1e-15, 1e-12, 20000);
      total += q.value;
    }
    return total;
  };

  double delta = spec.boundary_epsilon;
  if (delta == 0.0) return std::pow(both_halves(0.0, 1.0) / (2.0 * pi), 1.0 / p);

  double partial = both_halves(delta, 1.0);
  double previous_partial = partial;
  double previous_estimate = partial;
  double change = 0.0;
  for (int pass = 1; pass <= spec.adaptive_depth; ++pass) {
    const double next = 0.25 * delta;
    partial += both_halves(next, delta);
    delta = next;
    // The excluded piece is proportional to its length; extrapolate in δ.
    const double estimate = partial + (partial - previous_partial) / 3.0;
    change = std::abs(estimate - previous_estimate) / std::abs(estimate);
    if (pass > 1 && change < 1e-8) return std::pow(estimate / (2.0 * pi), 1.0 / p);
    previous_partial = partial;
    previous_estimate = estimate;
  }
  std::ostringstream msg;
  msg << "calderon_norm: arc refinement did not converge (relative change " << change << ")";
  throw ConvergenceError(msg.str(), change);
}

}  // namespace rieszlab
