#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace rieszlab {

/// Gauss–Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point Gauss–Legendre rule (Newton iteration on P_n).
const GaussRule& gauss_legendre(int n);

/// Integral of f over [a, b] with an n-point Gauss–Legendre rule.
template <class F>
double gauss_integrate(F&& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

/// Mean of f over the circle, trapezoid rule with n uniform nodes
/// t_j = offset + 2πj/n. Exact for trigonometric polynomials of degree < n.
template <class F>
double circle_mean(F&& f, int n, double offset = 0.0) {
  const double h = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(offset + h * j);
  return sum / n;
}

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of f over [a, b].
/// Interior breakpoints (kinks, jumps) start their own subintervals.
/// Stops when the error estimate is below max(abs_tol, rel_tol·|I|).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_intervals = 4000,
                              std::span<const double> breakpoints = {});

}  // namespace rieszlab
