#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rieszlab/function_core.hpp"
#include "rieszlab/norms.hpp"

namespace rieszlab {

/// Fourier multiplier -i·sign(k) with sign(0) = 1, so H[1] = -i and H∘H = -Id.
FourierSeries periodic_hilbert(const FourierSeries& series);

struct SingularOptions {
  /// Add the excluded-arc term ε·K(ε); the integrand K is even and smooth,
  /// so this lowers the truncation error from O(ε) to O(ε³).
  bool arc_correction = true;
  double rel_tol = 1e-12;
};

/// -(1/π) ∫_ε^π (χ(τ+t) - χ(τ-t)) / (2 tan(t/2)) dt by adaptive quadrature.
/// Annihilates constants; recovers the multiplier form minus its k = 0 term.
cplx singular_hilbert_at(const FourierSeries& series, double tau, double epsilon,
                         const SingularOptions& options = {});

/// Harmonic conjugate f̃ = -i(g - h̄) after moving h(0) into g.
HarmonicMap conjugate_map(const HarmonicMap& map);

enum class LinePairKind { PoissonKernel, Indicator, Lorentzian };

std::string to_string(LinePairKind kind);

/// Closed-form line Hilbert-transform pair. `height` is the half-plane
/// height y > 0 of the Poisson kernel and is ignored otherwise.
struct LinePair {
  LinePairKind kind = LinePairKind::Lorentzian;
  double height = 1.0;

  /// Points where φ or φ̃ is not smooth.
  std::vector<double> breakpoints() const;
};

/// (φ(x), φ̃(x)) with φ̃(x) = (1/π) p.v.∫ φ(t)/(x - t) dt.
std::pair<double, double> line_pair_values(const LinePair& pair, double x);

/// Principal value -(1/π) ∫_0^∞ (φ(x+t) - φ(x-t))/t dt by adaptive
/// quadrature; `breakpoints` are the non-smooth points of φ.
double line_hilbert_pv(const std::function<double(double)>& phi, double x,
                       std::span<const double> breakpoints = {});

/// ‖φ‖_p on the real line (Lebesgue measure); exponentially mapped tails.
double line_lp_norm(const std::function<double(double)>& phi, double p,
                    std::span<const double> breakpoints = {});

/// max over maps of ‖f̃‖_p / ‖f‖_p; each map must satisfy h(0) = 0.
double empirical_hilbert_ratio(double p, std::span<const HarmonicMap> maps,
                               const QuadratureSpec& spec = {});

}  // namespace rieszlab
