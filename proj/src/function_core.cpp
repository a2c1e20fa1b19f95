#include "rieszlab/function_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "rieszlab/error.hpp"

namespace rieszlab {

using std::numbers::pi;

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
}

TaylorPoly::TaylorPoly(std::initializer_list<cplx> coeffs)
    : TaylorPoly(std::vector<cplx>(coeffs)) {}

cplx TaylorPoly::operator()(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorPoly TaylorPoly::trimmed() const {
  std::vector<cplx> c = coeffs_;
  while (c.size() > 1 && c.back() == cplx{}) c.pop_back();
  return TaylorPoly(std::move(c));
}

TaylorPoly TaylorPoly::scaled(cplx c) const {
  std::vector<cplx> out(coeffs_);
  for (auto& a : out) a *= c;
  return TaylorPoly(std::move(out));
}

TaylorPoly TaylorPoly::with_coeff(std::size_t k, cplx value) const {
  std::vector<cplx> out(coeffs_);
  if (k >= out.size()) out.resize(k + 1);
  out[k] = value;
  return TaylorPoly(std::move(out));
}

HarmonicMap HarmonicMap::normalized() const {
  const cplx h0 = h.coeff(0);
  return {g.with_coeff(0, g.coeff(0) + std::conj(h0)), h.with_coeff(0, cplx{})};
}

HarmonicMap HarmonicMap::scaled(cplx c) const {
  return {g.scaled(c), h.scaled(std::conj(c))};
}

cplx eval_harmonic(const HarmonicMap& map, cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-12)) throw DomainError("eval_harmonic: |z| > 1");
  return map.value(z);
}

FourierSeries::FourierSeries(int degree) {
  if (degree < 0) throw std::invalid_argument("FourierSeries: negative degree");
  degree_ = degree;
  coeffs_.assign(2 * static_cast<std::size_t>(degree) + 1, cplx{});
}

cplx FourierSeries::operator[](int k) const {
  if (k < -degree_ || k > degree_) return {};
  return coeffs_[static_cast<std::size_t>(k + degree_)];
}

void FourierSeries::set(int k, cplx value) {
  const int need = std::abs(k);
  if (need > degree_) {
    std::vector<cplx> grown(2 * static_cast<std::size_t>(need) + 1, cplx{});
    for (int j = -degree_; j <= degree_; ++j)
      grown[static_cast<std::size_t>(j + need)] = coeffs_[static_cast<std::size_t>(j + degree_)];
    coeffs_ = std::move(grown);
    degree_ = need;
  }
  coeffs_[static_cast<std::size_t>(k + degree_)] = value;
}

cplx FourierSeries::operator()(double t) const {
  cplx acc{};
  for (int k = -degree_; k <= degree_; ++k) {
    const cplx c = coeffs_[static_cast<std::size_t>(k + degree_)];
    if (c != cplx{}) acc += c * std::polar(1.0, k * t);
  }
  return acc;
}

std::vector<std::pair<int, cplx>> FourierSeries::nonzero() const {
  std::vector<std::pair<int, cplx>> out;
  for (int k = -degree_; k <= degree_; ++k) {
    const cplx c = (*this)[k];
    if (c != cplx{}) out.emplace_back(k, c);
  }
  return out;
}

bool operator==(const FourierSeries& a, const FourierSeries& b) {
  const int n = std::max(a.degree_, b.degree_);
  for (int k = -n; k <= n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

FourierSeries boundary_series(const HarmonicMap& map) {
  FourierSeries s(static_cast<int>(map.degree()));
  s.set(0, map.g.coeff(0) + std::conj(map.h.coeff(0)));
  for (std::size_t k = 1; k <= map.degree(); ++k) {
    s.set(static_cast<int>(k), map.g.coeff(k));
    s.set(-static_cast<int>(k), std::conj(map.h.coeff(k)));
  }
  return s;
}

HarmonicMap map_from_series(const FourierSeries& series) {
  const int n = series.degree();
  std::vector<cplx> g(static_cast<std::size_t>(n) + 1), h(static_cast<std::size_t>(n) + 1);
  g[0] = series[0];
  for (int k = 1; k <= n; ++k) {
    g[static_cast<std::size_t>(k)] = series[k];
    h[static_cast<std::size_t>(k)] = std::conj(series[-k]);
  }
  return {TaylorPoly(std::move(g)).trimmed(), TaylorPoly(std::move(h)).trimmed()};
}

ExtremalParams::ExtremalParams(double gamma, double p) : gamma_(gamma), p_(p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("ExtremalParams: p must exceed 1");
  if (!(gamma > 0.0) || !(gamma < pi / (2.0 * p)))
    throw DomainError("ExtremalParams: gamma must lie in (0, pi/(2p))");
}

double ExtremalParams::exponent() const { return 2.0 * gamma_ / pi; }

cplx calderon_boundary(const ExtremalParams& params, double t) {
  const double half = 0.5 * std::remainder(t, 2.0 * pi);
  const double s = std::sin(half);
  if (s == 0.0) throw DomainError("calderon_boundary: singular at t = 0 mod 2pi");
  const double cot = std::cos(half) / s;
  if (cot == 0.0) return {};
  const double modulus = std::pow(std::abs(cot), params.exponent());
  return std::polar(modulus, cot > 0.0 ? params.gamma() : -params.gamma());
}

TaylorPoly calderon_taylor(double a, std::size_t n) {
  // (1 - z^2) F' = 2a F for F = ((1+z)/(1-z))^a.
  std::vector<cplx> c(n + 1);
  c[0] = 1.0;
  if (n >= 1) c[1] = 2.0 * a;
  for (std::size_t k = 1; k < n; ++k) {
    const double km1 = static_cast<double>(k) - 1.0;
    c[k + 1] = (2.0 * a * c[k] + km1 * c[k - 1]) / static_cast<double>(k + 1);
  }
  return TaylorPoly(std::move(c));
}

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::None: return "NONE";
    case Constraint::ReZero: return "RE_ZERO";
    case Constraint::ReNonNeg: return "RE_NONNEG";
    case Constraint::ReNonPos: return "RE_NONPOS";
  }
  return "NONE";
}

Constraint constraint_from_string(const std::string& s) {
  if (s == "NONE") return Constraint::None;
  if (s == "RE_ZERO") return Constraint::ReZero;
  if (s == "RE_NONNEG") return Constraint::ReNonNeg;
  if (s == "RE_NONPOS") return Constraint::ReNonPos;
  throw std::invalid_argument("unknown constraint '" + s + "'");
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

cplx Rng::unit_disk() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y < 1.0) return {x, y};
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TaylorPoly random_taylor(int degree, Rng& rng) {
  if (degree < 0) throw std::invalid_argument("random_taylor: negative degree");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& a : c) a = rng.unit_disk();
  return TaylorPoly(std::move(c));
}

namespace {

double dyadic(double x) { return std::round(x * 65536.0) / 65536.0; }

}  // namespace

HarmonicMap random_harmonic(int degree, std::uint64_t seed, Constraint constraint) {
  if (degree < 0) throw std::invalid_argument("random_harmonic: negative degree");
  Rng rng(seed);
  TaylorPoly g = random_taylor(degree, rng);
  TaylorPoly h = random_taylor(degree, rng);
  cplx g0 = g.coeff(0);
  cplx h0 = h.coeff(0);
  switch (constraint) {
    case Constraint::None:
      break;
    case Constraint::ReZero: {
      // h0 = i s conj(g0) on a dyadic grid so that Re(g0 h0) = a(sb) - b(sa)
      // is evaluated without rounding and vanishes exactly.
      g0 = {dyadic(g0.real()), dyadic(g0.imag())};
      const double s = dyadic(rng.uniform(-1.0, 1.0));
      h0 = {s * g0.imag(), s * g0.real()};
      break;
    }
    case Constraint::ReNonNeg:
      if ((g0 * h0).real() < 0.0) h0 = -h0;
      break;
    case Constraint::ReNonPos:
      if ((g0 * h0).real() > 0.0) h0 = -h0;
      break;
  }
  return {g.with_coeff(0, g0), h.with_coeff(0, h0)};
}

namespace {

using nlohmann::json;

json coeffs_to_json(const TaylorPoly& p) {
  json arr = json::array();
  for (const cplx& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

TaylorPoly coeffs_from_json(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ParseError("missing field '" + key + "'", key, 0);
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError("field '" + key + "' must be an array", key, 0);
  std::vector<cplx> c;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = key + "[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError("field '" + field + "' must be a [re, im] pair of numbers", field, 0);
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError("field '" + field + "' is not finite", field, 0);
    c.emplace_back(re, im);
  }
  return TaylorPoly(std::move(c));
}

}  // namespace

std::string map_to_json(const HarmonicMap& map, bool with_series) {
  json doc;
  doc["g"] = coeffs_to_json(map.g);
  doc["h"] = coeffs_to_json(map.h);
  if (with_series) {
    json series = json::array();
    for (const auto& [k, c] : boundary_series(map).nonzero()) series.push_back({k, c.real(), c.imag()});
    doc["series"] = series;
  }
  return doc.dump(2) + "\n";
}

HarmonicMap map_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const int line = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream msg;
    msg << "line " << line << ": invalid JSON (" << e.what() << ")";
    throw ParseError(msg.str(), "", line);
  }
  if (!doc.is_object()) throw ParseError("line 1: top-level value must be an object", "", 1);
  try {
    return {coeffs_from_json(doc, "g"), coeffs_from_json(doc, "h")};
  } catch (const ParseError& e) {
    const std::string key = e.field().substr(0, e.field().find('['));
    const std::size_t at = text.find("\"" + key + "\"");
    const int line = at == std::string::npos ? 1 : line_of_offset(text, at);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.field(), line);
  }
}

}  // namespace rieszlab
