#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rieszlab/constants.hpp"
#include "rieszlab/function_core.hpp"
#include "rieszlab/norms.hpp"
#include "rieszlab/report.hpp"

namespace rieszlab {

enum class TheoremId {
  KALAJ,
  KALAJ1,
  PRENTE,
  VER2,
  VER3,
  KALAJ2_NESI1,
  KALAJ2_NESI2,
  HILI_PAIRS,
  ISOP,
  STREBEL,
  IPL,
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  /// Admissible exponent (or n for ISOP).
  ParamRange range;
  /// Sampler constraint on Re(g(0)h(0)).
  Constraint constraint;
  bool integer_parameter;
  /// Maps are holomorphic (h = 0) with the stated g(0) condition.
  bool holomorphic;
};

std::span<const TheoremId> all_theorems();
const TheoremInfo& info(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Constant multiplying the right-hand side of the bound at p (or n).
double theorem_constant(TheoremId id, double p_or_n);

struct BoundSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of the bound for one map. VER2/VER3/STREBEL read the map as the
/// holomorphic g (h must vanish); IPL reads (g, h) as the pair (a, b).
/// HypothesisError when the map violates the tag's hypothesis.
BoundSides theorem_sides(TheoremId id, const HarmonicMap& map, double p_or_n,
                         std::optional<Constraint> relaxed = std::nullopt);

/// Throws HypothesisError unless the map satisfies the tag's hypothesis
/// (under the relaxed constraint where one is admitted).
void check_hypothesis(TheoremId id, const HarmonicMap& map, double p_or_n,
                      std::optional<Constraint> relaxed = std::nullopt);

/// Random map i of a run: degree cycles through 1..degree, seed derive_seed(seed, i).
HarmonicMap theorem_sample(TheoremId id, int index, int degree, std::uint64_t seed,
                           std::optional<Constraint> relaxed = std::nullopt);

/// Checks LHS ≤ RHS·(1 + tol) on `samples` random maps; ratio_max is the
/// largest LHS/RHS. HILI_PAIRS ignores samples/degree and runs the line catalog.
/// `relaxed` selects the weaker hypothesis where the tag admits one (KALAJ
/// with RE_NONNEG for p ≤ 3).
VerificationReport verify_theorem(TheoremId id, double p_or_n, int samples, int degree, std::uint64_t seed,
                                  double tol = 1e-9, std::optional<Constraint> relaxed = std::nullopt);

/// Same check on caller-supplied maps; HypothesisError on the first map that
/// violates the hypothesis.
VerificationReport verify_theorem_on(TheoremId id, double p_or_n, std::span<const HarmonicMap> maps,
                                     double tol = 1e-9, std::optional<Constraint> relaxed = std::nullopt);

/// The six quantities of the isoperimetric estimate for the map normalized
/// to h(0) = 0, in order: ∫_U|f|^{2n}, the binomial Hölder sum, the sum after
/// the real-part estimate, the sum after the boundary estimate, (1+E)^n T²,
/// and the final (4 sin²(π/4n))^{-n} (∫_T|f|^n)². Each should be ≥ the previous.
std::vector<double> isoperimetric_chain(const HarmonicMap& map, int n);

/// True when every link is ≥ the previous one within relative tolerance.
bool chain_monotone(std::span<const double> chain, double tol = 1e-9);

/// ∫_U (|a|²+|b|²)^{2p} ≤ (∫_T (|a|²+|b|²)^p)², p > 0.
VerificationReport verify_ipl(const TaylorPoly& a, const TaylorPoly& b, double p, double tol = 1e-9);

/// Calderon ratios for γ = fraction·π/(2p): PRENTE ‖v‖/‖u‖, VER2 ‖g‖/‖u‖,
/// VER3 ‖v‖/‖g‖. Fractions must lie in (0, 1); p in (1, 2) for PRENTE and
/// (1, 2] otherwise.
std::vector<double> sharpness_probe(TheoremId id, double p, std::span<const double> gamma_fractions,
                                    const QuadratureSpec& spec = {});

/// Probe wrapped as a report: violations when the ratios fail to increase or
/// exceed the sharp constant.
VerificationReport probe_report(TheoremId id, double p, std::span<const double> gamma_fractions,
                                double tol = 1e-9);

}  // namespace rieszlab
