#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rieszlab/function_core.hpp"

namespace rieszlab {

/// Interval of admissible exponents, with open/closed ends.
struct ParamRange {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  bool contains(double x) const;
  std::string describe() const;
};

enum class ConstantKind {
  A,
  B,
  HilbertNorm,
  Pichorides,
  VerbitskyCsc,
  VerbitskySec,
  ALemmaNice,
  BLemmaNice,
  ALemmaHard,
  BLemmaHard,
  CLemmaL2,
  DLemmaL2,
  CVanesa,
  DVanesa,
  VersiA,
  VersiB,
  Isop,
};

std::span<const ConstantKind> all_constant_kinds();
std::string_view to_string(ConstantKind kind);
std::optional<ConstantKind> constant_from_string(std::string_view name);
/// Admissible p, or admissible n for ISOP (integers only).
ParamRange validity(ConstantKind kind);

/// Closed-form value at p (or at the integer n for ISOP); DomainError outside
/// the validity range.
double sharp_constant(ConstantKind kind, double p_or_n);

/// max{p, p/(p-1)}.
double conjugate_max(double p);

/// ρ^{p/2} cos(pθ/2) with θ = Arg ζ; zero at ζ = 0. Valid for p in (1, 2].
double re_branch_power(cplx zeta, double p);

/// Same with the angle extended to [-2π, 2π] by the shifted-cosine pieces.
double re_branch_power_polar(double rho, double theta, double p);

/// Reflected-cosine construction of order p ≥ 4 (π-periodic, even).
double theta_hard_phi(double theta, double p);
/// -cos(p(π - |θ|)/2) at the principal angle of θ, p in [2, 4].
double theta_hard_conj(double theta, double p);
/// ϑ for p > 2: the conj form for p ≤ 4, the reflected construction above 4.
double theta_hard(double theta, double p);
/// Even, 2π-periodic ϑ₁ for p > 2.
double theta_one(double theta, double p);

/// Pluri-subharmonic minorants of the two-variable inequalities.
double minorant_F(cplx z, cplx w, double p);
double minorant_G(cplx z, cplx w, double p);

enum class MinorantId { ReBranch, PhiMid, PhiHigh, ThetaHard, ThetaOne, Psi, FCal, GCal };

std::span<const MinorantId> all_minorants();
std::string_view to_string(MinorantId id);
std::optional<MinorantId> minorant_from_string(std::string_view name);
ParamRange validity(MinorantId id);
/// True for the two-variable minorants F_CAL and G_CAL.
bool is_two_variable(MinorantId id);

/// Angular profile m(θ) of a one-variable minorant: value(ρe^{iθ}) = ρ^{p/2} m(θ).
double minorant_angular(MinorantId id, double theta, double p);
/// One-variable minorant at ζ.
double minorant_value(MinorantId id, cplx zeta, double p);

/// Superset of the angles in (-π, π] where any angular profile of order p can
/// fail to be smooth: all kπ/2 + jπ/p.
std::vector<double> angular_breakpoints(double p);

}  // namespace rieszlab
