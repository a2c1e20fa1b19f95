#include "rieszlab/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "rieszlab/error.hpp"

namespace rieszlab {

using std::numbers::pi;

bool ParamRange::contains(double x) const {
  if (!std::isfinite(x)) return false;
  const bool above = lo_open ? x > lo : x >= lo;
  const bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

std::string ParamRange::describe() const {
  std::ostringstream out;
  out << (lo_open ? "(" : "[") << lo << ", " << hi << (hi_open ? ")" : "]");
  return out.str();
}

namespace {

constexpr std::array<ConstantKind, 17> kConstantKinds = {
    ConstantKind::A,          ConstantKind::B,          ConstantKind::HilbertNorm,
    ConstantKind::Pichorides, ConstantKind::VerbitskyCsc, ConstantKind::VerbitskySec,
    ConstantKind::ALemmaNice, ConstantKind::BLemmaNice, ConstantKind::ALemmaHard,
    ConstantKind::BLemmaHard, ConstantKind::CLemmaL2,   ConstantKind::DLemmaL2,
    ConstantKind::CVanesa,    ConstantKind::DVanesa,    ConstantKind::VersiA,
    ConstantKind::VersiB,     ConstantKind::Isop};

constexpr std::array<MinorantId, 8> kMinorants = {
    MinorantId::ReBranch, MinorantId::PhiMid, MinorantId::PhiHigh, MinorantId::ThetaHard,
    MinorantId::ThetaOne, MinorantId::Psi,    MinorantId::FCal,    MinorantId::GCal};

constexpr double kMaxExponent = 64.0;

// 1 - |cos(π/p)| without cancellation near p = 2.
double one_minus_abs_cos(double p) {
  const double half = pi / (2.0 * p);
  if (p >= 2.0) {
    const double s = std::sin(half);
    return 2.0 * s * s;
  }
  const double c = std::cos(half);
  return 2.0 * c * c;
}

void require(const ParamRange& range, double x, std::string_view what) {
  if (!range.contains(x)) {
    std::ostringstream msg;
    msg << what << ": argument " << x << " outside " << range.describe();
    throw DomainError(msg.str());
  }
}

// Principal angle in (-π, π].
double principal(double theta) {
  double t = std::remainder(theta, 2.0 * pi);
  if (t == -pi) t = pi;
  return t;
}

}  // namespace

std::span<const ConstantKind> all_constant_kinds() { return kConstantKinds; }

std::string_view to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::A: return "A";
    case ConstantKind::B: return "B";
    case ConstantKind::HilbertNorm: return "HILBERT_NORM";
    case ConstantKind::Pichorides: return "PICHORIDES";
    case ConstantKind::VerbitskyCsc: return "VERBITSKY_CSC";
    case ConstantKind::VerbitskySec: return "VERBITSKY_SEC";
    case ConstantKind::ALemmaNice: return "A_LEMMA_NICE";
    case ConstantKind::BLemmaNice: return "B_LEMMA_NICE";
    case ConstantKind::ALemmaHard: return "A_LEMMA_HARD";
    case ConstantKind::BLemmaHard: return "B_LEMMA_HARD";
    case ConstantKind::CLemmaL2: return "C_LEMMA_L2";
    case ConstantKind::DLemmaL2: return "D_LEMMA_L2";
    case ConstantKind::CVanesa: return "C_VANESA";
    case ConstantKind::DVanesa: return "D_VANESA";
    case ConstantKind::VersiA: return "VERSI_A";
    case ConstantKind::VersiB: return "VERSI_B";
    case ConstantKind::Isop: return "ISOP";
  }
  return "";
}

std::optional<ConstantKind> constant_from_string(std::string_view name) {
  for (ConstantKind k : kConstantKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

ParamRange validity(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::A:
    case ConstantKind::B:
    case ConstantKind::HilbertNorm:
    case ConstantKind::Pichorides:
    case ConstantKind::VerbitskyCsc:
    case ConstantKind::VerbitskySec:
      return {1.0, kMaxExponent, true, false};
    case ConstantKind::ALemmaNice:
    case ConstantKind::BLemmaNice:
    case ConstantKind::VersiA:
    case ConstantKind::VersiB:
      return {1.0, 2.0, true, false};
    case ConstantKind::ALemmaHard:
    case ConstantKind::BLemmaHard:
      return {2.0, kMaxExponent, false, false};
    case ConstantKind::CLemmaL2:
    case ConstantKind::DLemmaL2:
      return {2.0, kMaxExponent, true, false};
    case ConstantKind::CVanesa:
    case ConstantKind::DVanesa:
      return {1.0, 2.0, true, true};
    case ConstantKind::Isop:
      return {2.0, kMaxExponent, false, false};
  }
  return {1.0, kMaxExponent, true, false};
}

double conjugate_max(double p) {
  if (!(p > 1.0)) throw DomainError("conjugate_max: p must exceed 1");
  return p >= 2.0 ? p : p / (p - 1.0);
}

double sharp_constant(ConstantKind kind, double x) {
  require(validity(kind), x, to_string(kind));
  const double p = x;
  switch (kind) {
    case ConstantKind::A:
      return 1.0 / std::sqrt(one_minus_abs_cos(p));
    case ConstantKind::B:
      return std::numbers::sqrt2 * std::cos(pi / (2.0 * conjugate_max(p)));
    case ConstantKind::HilbertNorm:
      return 1.0 / std::tan(pi / (2.0 * conjugate_max(p)));
    case ConstantKind::Pichorides:
      return p <= 2.0 ? std::tan(pi / (2.0 * p)) : 1.0 / std::tan(pi / (2.0 * p));
    case ConstantKind::VerbitskyCsc:
      return 1.0 / std::sin(pi / (2.0 * conjugate_max(p)));
    case ConstantKind::VerbitskySec:
      return 1.0 / std::cos(pi / (2.0 * conjugate_max(p)));
    case ConstantKind::ALemmaNice: {
      const double c = std::cos(pi / (2.0 * p));
      return std::pow(2.0 * c * c, -0.5 * p);  // (1 + cos(π/p))^{-p/2}
    }
    case ConstantKind::BLemmaNice:
      return std::pow(2.0, 0.5 * p) * std::tan(pi / (2.0 * p));
    case ConstantKind::ALemmaHard: {
      const double s = std::sin(pi / (2.0 * p));
      return std::pow(2.0 * s * s, -0.5 * p);  // (1 - cos(π/p))^{-p/2}
    }
    case ConstantKind::BLemmaHard:
      return std::pow(2.0, 0.5 * p) / std::tan(pi / (2.0 * p));
    case ConstantKind::CLemmaL2:
      return std::pow(std::numbers::sqrt2 * std::cos(pi / (2.0 * p)), p);
    case ConstantKind::DLemmaL2: {
      const double h = pi / (2.0 * p);
      return std::pow(2.0, p) * std::pow(std::cos(h), p - 1.0) * std::sin(h);
    }
    case ConstantKind::CVanesa:
      return std::pow(std::numbers::sqrt2 * std::sin(pi / (2.0 * p)), p);
    case ConstantKind::DVanesa: {
      const double h = pi / (2.0 * p);
      const double s = std::sin(h);
      // (2 - 2cos(π/p))^{p/2} cot(π/(2p)).
      return std::pow(4.0 * s * s, 0.5 * p) * std::cos(h) / s;
    }
    case ConstantKind::VersiA:
      return std::pow(std::cos(pi / (2.0 * p)), -p);
    case ConstantKind::VersiB:
      return std::tan(pi / (2.0 * p));
    case ConstantKind::Isop: {
      if (x != std::floor(x)) throw DomainError("ISOP: n must be an integer");
      return 0.5 / std::sin(pi / (4.0 * x));
    }
  }
  return 0.0;
}

double re_branch_power(cplx zeta, double p) {
  if (zeta == cplx{}) return 0.0;
  return std::pow(std::abs(zeta), 0.5 * p) * std::cos(0.5 * p * std::arg(zeta));
}

double re_branch_power_polar(double rho, double theta, double p) {
  if (rho == 0.0) return 0.0;
  double phase = 0.5 * p * theta;
  if (theta > pi) {
    phase -= p * pi;
  } else if (theta < -pi) {
    phase += p * pi;
  }
  return std::pow(rho, 0.5 * p) * std::cos(phase);
}

double theta_hard_phi(double theta, double p) {
  if (!(p >= 4.0)) throw DomainError("theta_hard_phi: p must be at least 4");
  double a = std::abs(principal(theta));
  if (a > 0.5 * pi) a = pi - a;
  const double hp = 0.5 * p;
  if (a >= 0.5 * pi - 2.0 * pi / p) return -std::cos(hp * (0.5 * pi - a));
  return std::max(std::abs(std::cos(hp * (0.5 * pi - a))), std::abs(std::cos(hp * (0.5 * pi + a))));
}

double theta_hard_conj(double theta, double p) {
  if (!(p >= 2.0)) throw DomainError("theta_hard_conj: p must be at least 2");
  return -std::cos(0.5 * p * (pi - std::abs(principal(theta))));
}

double theta_hard(double theta, double p) {
  if (!(p > 2.0)) throw DomainError("theta_hard: p must exceed 2");
  return p <= 4.0 ? theta_hard_conj(theta, p) : theta_hard_phi(theta, p);
}

double theta_one(double theta, double p) {
  if (!(p > 2.0)) throw DomainError("theta_one: p must exceed 2");
  const double a = std::abs(principal(theta));  // even and 2π-periodic
  const double hp = 0.5 * p;
  const double band = 2.0 * pi / p;
  if (a <= band) return -std::cos(hp * a);
  if (a >= 2.0 * pi - band) return -std::cos(hp * (2.0 * pi - a));
  return std::max(std::abs(std::cos(hp * a)), std::abs(std::cos(hp * (2.0 * pi - a))));
}

double minorant_F(cplx z, cplx w, double p) {
  if (!(p > 1.0)) throw DomainError("minorant_F: p must exceed 1");
  const cplx zeta = z * w;
  if (zeta == cplx{}) return 0.0;
  if (p <= 2.0) return re_branch_power(zeta, p);
  return minorant_value(p <= 4.0 ? MinorantId::PhiMid : MinorantId::PhiHigh, zeta, p);
}

double minorant_G(cplx z, cplx w, double p) {
  if (!(p > 1.0) || p == 2.0) throw DomainError("minorant_G: p must exceed 1 and differ from 2");
  const cplx zeta = z * w;
  if (zeta == cplx{}) return 0.0;
  return minorant_value(MinorantId::Psi, zeta, p);
}

std::span<const MinorantId> all_minorants() { return kMinorants; }

std::string_view to_string(MinorantId id) {
  switch (id) {
    case MinorantId::ReBranch: return "RE_BRANCH";
    case MinorantId::PhiMid: return "PHI_MID";
    case MinorantId::PhiHigh: return "PHI_HIGH";
    case MinorantId::ThetaHard: return "THETA_HARD";
    case MinorantId::ThetaOne: return "THETA_ONE";
    case MinorantId::Psi: return "PSI";
    case MinorantId::FCal: return "F_CAL";
    case MinorantId::GCal: return "G_CAL";
  }
  return "";
}

std::optional<MinorantId> minorant_from_string(std::string_view name) {
  for (MinorantId id : kMinorants)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

ParamRange validity(MinorantId id) {
  switch (id) {
    case MinorantId::ReBranch: return {1.0, 2.0, true, false};
    case MinorantId::PhiMid: return {2.0, 4.0, false, false};
    case MinorantId::PhiHigh: return {4.0, kMaxExponent, false, false};
    case MinorantId::ThetaHard:
    case MinorantId::ThetaOne: return {2.0, kMaxExponent, true, false};
    case MinorantId::Psi:
    case MinorantId::FCal:
    case MinorantId::GCal: return {1.0, kMaxExponent, true, false};
  }
  return {1.0, kMaxExponent, true, false};
}

bool is_two_variable(MinorantId id) { return id == MinorantId::FCal || id == MinorantId::GCal; }

double minorant_angular(MinorantId id, double theta, double p) {
  require(validity(id), p, to_string(id));
  const double hp = 0.5 * p;
  switch (id) {
    case MinorantId::ReBranch:
      return std::cos(hp * principal(theta));
    case MinorantId::PhiMid:
      return -std::cos(hp * (pi - std::abs(principal(theta))));
    case MinorantId::PhiHigh:
      return theta_hard_phi(theta - 0.5 * pi, p);
    case MinorantId::ThetaHard:
      return theta_hard(theta, p);
    case MinorantId::ThetaOne:
      return theta_one(theta, p);
    case MinorantId::Psi:
      if (p == 2.0) throw DomainError("PSI: undefined at p = 2");
      if (p < 2.0) return std::cos(hp * (pi - std::abs(principal(theta))));
      return theta_one(theta, p);
    case MinorantId::FCal:
    case MinorantId::GCal:
      break;
  }
  throw std::invalid_argument("minorant_angular: two-variable minorant has no angular profile");
}

double minorant_value(MinorantId id, cplx zeta, double p) {
  const double m = minorant_angular(id, std::arg(zeta), p);
  if (zeta == cplx{}) return 0.0;
  return std::pow(std::abs(zeta), 0.5 * p) * m;
}

std::vector<double> angular_breakpoints(double p) {
  std::set<double> out;
  const int reach = static_cast<int>(std::ceil(2.0 * p)) + 2;
  for (int k = -4; k <= 4; ++k) {
    for (int j = -reach; j <= reach; ++j) {
      const double a = k * 0.5 * pi + j * pi / p;
      if (a > -pi && a <= pi) out.insert(a);
    }
  }
  // Merge angles that coincide up to rounding.
  std::vector<double> merged;
  for (double a : out)
    if (merged.empty() || a - merged.back() > 1e-13) merged.push_back(a);
  return merged;
}

}  // namespace rieszlab
