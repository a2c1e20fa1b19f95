#pragma once

#include "rieszlab/function_core.hpp"

namespace rieszlab {

/// Discretization of the normalized circle and disk measures. Zero node
/// counts select automatic sizes from the map degree and the exponent.
struct QuadratureSpec {
  int n_angle = 0;
  int n_radial = 0;
  /// Initial excluded arc for singular boundary data, in [0, 1e-2].
  double boundary_epsilon = 1e-3;
  /// Maximum number of arc-shrinking passes for singular boundary data.
  int adaptive_depth = 40;

  void validate() const;
};

/// Number of circle nodes used for a map of the given degree at exponent p.
int angle_nodes(const QuadratureSpec& spec, std::size_t degree, double p);
/// Number of radial Gauss–Legendre nodes used for a map of the given degree.
int radial_nodes(const QuadratureSpec& spec, std::size_t degree, double p);

/// Circle mean of |f(r e^{it})|^q for any q > 0 (no root taken).
double circle_power_mean(const HarmonicMap& map, double q, double r, const QuadratureSpec& spec = {});
/// Disk mean (dxdy/π) of |f|^q for any q > 0 (no root taken).
double disk_power_mean(const HarmonicMap& map, double q, const QuadratureSpec& spec = {});

/// Circle mean of (|g|² + |h|²)^{q/2} on |z| = r, any q > 0.
double circle_mixed_mean(const HarmonicMap& map, double q, double r, const QuadratureSpec& spec = {});
/// Disk mean (dxdy/π) of (|g|² + |h|²)^{q/2}, any q > 0.
double disk_mixed_mean(const HarmonicMap& map, double q, const QuadratureSpec& spec = {});

/// M_p(f, r); p in (1, 64], r in [0, 1].
double mp_radius(const HarmonicMap& map, double p, double r, const QuadratureSpec& spec = {});
/// ‖f‖_p, the boundary L^p norm.
double hardy_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec = {});
/// |||f|||_p = ‖(|g|²+|h|²)^{1/2}‖_p on the circle.
double triple_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec = {});
/// ‖f‖_{b^p} with respect to dxdy/π.
double bergman_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec = {});
/// (∫_U (|g|²+|h|²)^{p/2} dxdy/π)^{1/p}.
double bergman_triple_norm(const HarmonicMap& map, double p, const QuadratureSpec& spec = {});

/// Boundary component of the Calderon family g = ((1+z)/(1-z))^{2γ/π}.
enum class CalderonPart { Real, Imag, Full };

/// L^p norm (exponent params.p()) of Re g, Im g or g on the circle, by
/// adaptive quadrature around the boundary singularity at t = 0.
double calderon_norm(const ExtremalParams& params, CalderonPart part, const QuadratureSpec& spec = {});

/// Throws DomainError unless p lies in (1, 64].
void check_norm_exponent(double p);

}  // namespace rieszlab
