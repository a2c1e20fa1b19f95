#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rieszlab {

using cplx = std::complex<double>;

/// Holomorphic polynomial a_0 + a_1 z + ... + a_N z^N.
class TaylorPoly {
 public:
  TaylorPoly() : coeffs_{cplx{}} {}
  explicit TaylorPoly(std::vector<cplx> coeffs);
  TaylorPoly(std::initializer_list<cplx> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

  /// Horner evaluation.
  cplx operator()(cplx z) const;

  /// Copy with trailing zero coefficients removed (degree 0 is kept).
  TaylorPoly trimmed() const;
  TaylorPoly scaled(cplx c) const;
  TaylorPoly with_coeff(std::size_t k, cplx value) const;

  friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

 private:
  std::vector<cplx> coeffs_;
};

/// f = g + conj(h) on the closed unit disk.
struct HarmonicMap {
  TaylorPoly g;
  TaylorPoly h;

  std::size_t degree() const { return std::max(g.degree(), h.degree()); }

  /// Unchecked pointwise value g(z) + conj(h(z)).
  cplx value(cplx z) const { return g(z) + std::conj(h(z)); }

  /// Moves h(0) into g(0) as conj(h(0)); f is unchanged and h(0) = 0.
  HarmonicMap normalized() const;

  /// The map c·f, i.e. (c·g, conj(c)·h).
  HarmonicMap scaled(cplx c) const;

  friend bool operator==(const HarmonicMap&, const HarmonicMap&) = default;
};

/// g(z) + conj(h(z)); throws DomainError for |z| > 1.
cplx eval_harmonic(const HarmonicMap& map, cplx z);

/// Bilateral Fourier coefficients c_k, k in [-N, N], stored densely.
class FourierSeries {
 public:
  FourierSeries() : coeffs_(1) {}
  explicit FourierSeries(int degree);

  int degree() const { return degree_; }
  cplx operator[](int k) const;
  void set(int k, cplx value);

  /// Sum of c_k e^{ikt}.
  cplx operator()(double t) const;

  /// Indices with nonzero coefficients, ascending.
  std::vector<std::pair<int, cplx>> nonzero() const;

  friend bool operator==(const FourierSeries& a, const FourierSeries& b);

 private:
  int degree_ = 0;
  std::vector<cplx> coeffs_;  // coeffs_[k + degree_]
};

/// Boundary trace of f: c_k = g_k (k > 0), conj(h_{-k}) (k < 0), g_0 + conj(h_0).
FourierSeries boundary_series(const HarmonicMap& map);

/// Inverse of boundary_series under the convention h(0) = 0.
HarmonicMap map_from_series(const FourierSeries& series);

/// Parameters of g(z) = ((1+z)/(1-z))^{2γ/π}; requires 0 < γ < π/(2p), p > 1.
class ExtremalParams {
 public:
  ExtremalParams(double gamma, double p);
  double gamma() const { return gamma_; }
  double p() const { return p_; }
  /// Power 2γ/π of the Cayley factor.
  double exponent() const;

 private:
  double gamma_;
  double p_;
};

/// g(e^{it}) = |cot(t/2)|^{2γ/π} e^{±iγ}, sign of cot(t/2); DomainError at t ≡ 0.
cplx calderon_boundary(const ExtremalParams& params, double t);

/// Taylor coefficients of ((1+z)/(1-z))^a up to degree n.
TaylorPoly calderon_taylor(double a, std::size_t n);

enum class Constraint { None, ReZero, ReNonNeg, ReNonPos };

std::string to_string(Constraint c);
Constraint constraint_from_string(const std::string& s);

/// 64-bit Mersenne twister with platform-independent real/disk draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                         // [0, 1)
  double uniform(double lo, double hi);     // [lo, hi)
  cplx unit_disk();                         // uniform in |z| < 1
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Stream-splitting hash: independent seed for sample `index` of a run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Coefficients i.i.d. uniform in the unit disk with the constraint enforced
/// on g(0)h(0). Deterministic for fixed arguments.
HarmonicMap random_harmonic(int degree, std::uint64_t seed, Constraint constraint);

/// Holomorphic polynomial with coefficients uniform in the unit disk.
TaylorPoly random_taylor(int degree, Rng& rng);

/// JSON form {"g": [[re,im],...], "h": [[re,im],...]}.
std::string map_to_json(const HarmonicMap& map, bool with_series = false);
HarmonicMap map_from_json(const std::string& text);

}  // namespace rieszlab
