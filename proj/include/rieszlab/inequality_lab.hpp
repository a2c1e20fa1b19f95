#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rieszlab/constants.hpp"
#include "rieszlab/report.hpp"

namespace rieszlab {

enum class InequalityId {
  FSH,
  POSA,
  ALE,
  ALE1,
  L2,
  ARI,
  VANESA,
  VERSI,
  CONTI_1,
  CONTI_2,
  LPE_X,
  LPE_Y,
  HARD_PRIMA,
  HARD_SECONDA1,
  HARD_SAME,
  HARD_HARDY,
};

/// Parameters of a slack function: reduced (r, t) for two-variable
/// inequalities, an angle x, or the exponent itself.
enum class SlackShape { TwoVariable, Angle, Exponent };

struct InequalityInfo {
  InequalityId id;
  std::string_view name;
  SlackShape shape;
  ParamRange p_range;
  /// Scanned interval of t (two-variable) or x (angle); unused for Exponent.
  double axis_lo;
  double axis_hi;
  bool axis_lo_open;
};

std::span<const InequalityId> all_inequalities();
const InequalityInfo& info(InequalityId id);
std::optional<InequalityId> inequality_from_string(std::string_view name);

/// Eight exponents spread over the validity range of the tag.
std::vector<double> sample_exponents(InequalityId id);

/// Raw slack at reduced coordinates r = |z|/|w| in (0, 1], t = arg z + arg w.
double slack(InequalityId id, double p, double r, double t);
/// Slack divided by the largest of its three terms: same sign, and its
/// rounding error stays near p·ε even when the terms are huge.
double normalized_slack(InequalityId id, double p, double r, double t);
/// Full two-complex-variable form of the inequality.
double slack_complex(InequalityId id, double p, cplx z, cplx w);
/// Slack of a one-parameter inequality (angle x, or x = p for exponent tags).
double slack_1d(InequalityId id, double p, double x);

struct GridSpec {
  int n_r = 2000;
  int n_t = 4000;
  int n_1d = 200000;
  int refine_nodes = 64;
  double tolerance = 1e-9;

  void validate() const;
};

/// Full grid scan plus one local refinement around the minimum. Two-variable
/// slacks are scanned in normalized form.
VerificationReport verify_pointwise(InequalityId id, double p, const GridSpec& grid = {});

struct EqualityPoint {
  std::vector<double> params;
  double slack = 0.0;
};

/// Coarse-to-fine minimization of the (normalized) slack, three passes.
EqualityPoint locate_equality(InequalityId id, double p);

/// Angle sums t (r = 1) where equality holds, mod 2π; empty when the tag has
/// no interior equality set.
std::vector<double> equality_angles(InequalityId id, double p);

/// Random (z, w) scan of slack_complex, also checking it against the reduced
/// form scaled by max(|z|,|w|)^p. Violations: negative slack or mismatch.
VerificationReport homogeneity_scan(InequalityId id, double p, int samples, std::uint64_t seed,
                                    double tol = 1e-9);

/// Mean of f over the circle |ζ - center| = rho. The circle is split where it
/// meets the rays arg ζ = θ_k in `kink_rays` and at its closest approach to 0;
/// each arc is integrated adaptively.
double circle_average(const std::function<double(cplx)>& f, cplx center, double rho,
                      std::span<const double> kink_rays);

/// Sub-mean test of an arbitrary function. Centers are drawn in |z| < 2 plus
/// z = 0; radii satisfy rho ≤ |z0|, or rho < 2 at the origin. Deficits are
/// divided by max(1, |f|) on the circle.
/// The trapezoid average with `angles` nodes is reported alongside as a
/// cross-check.
VerificationReport check_submean_function(std::string_view id, const std::function<double(cplx)>& f,
                                          std::span<const double> kink_rays, int centers, int radii,
                                          int angles, std::uint64_t seed, double tol = 1e-9);

/// Sub-mean test of a one-variable minorant; at z = 0 the average is also
/// compared with the closed-form circle mean when one exists.
VerificationReport check_submean(MinorantId id, double p, int centers, int radii, int angles,
                                 std::uint64_t seed, double tol = 1e-9);

/// Sub-mean test of F_CAL / G_CAL restricted to random complex lines
/// t ↦ (z0 + t w1, w0 + t w2). `angles` sets the kink-detection sampling.
VerificationReport check_pluri_lines(MinorantId id, double p, int n_lines, std::uint64_t seed,
                                     double tol = 1e-9, int radii = 4, int angles = 512);

/// Mean of a one-variable minorant over |ζ| = rho by adaptive quadrature
/// between its angular breakpoints.
double origin_circle_mean(MinorantId id, double p, double rho);

/// Closed-form circle mean at the origin where available.
std::optional<double> closed_form_origin_mean(MinorantId id, double p, double rho);

}  // namespace rieszlab
