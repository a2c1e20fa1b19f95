#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "rieszlab/error.hpp"
#include "rieszlab/function_core.hpp"

using namespace rieszlab;
using std::numbers::pi;

namespace {

// Power-sum evaluation, independent of the Horner scheme.
cplx power_sum(const TaylorPoly& p, cplx z) {
  cplx acc{};
  for (std::size_t k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * std::pow(z, static_cast<double>(k));
  return acc;
}

// Reference splitmix64: state advanced by the golden gamma, then mixed.
std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("evaluation of simple maps") {
  const HarmonicMap identity{TaylorPoly({0.0, 1.0}), TaylorPoly()};
  CHECK(eval_harmonic(identity, {0.0, 1.0}) == cplx{0.0, 1.0});

  const HarmonicMap cosine{TaylorPoly({0.0, 0.5}), TaylorPoly({0.0, 0.5})};
  for (double t : {0.0, 0.4, 1.3, 2.9, -2.0}) {
    const cplx v = eval_harmonic(cosine, std::polar(1.0, t));
    CHECK(v.real() == doctest::Approx(std::cos(t)).epsilon(1e-15));
    CHECK(std::abs(v.imag()) < 1e-16);
  }
}

TEST_CASE("Horner evaluation matches power sums on random maps") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const HarmonicMap m = random_harmonic(8, derive_seed(3, trial), Constraint::None);
    for (int i = 0; i < 100; ++i) {
      const cplx z = rng.unit_disk();
      const cplx expected = power_sum(m.g, z) + std::conj(power_sum(m.h, z));
      CHECK(std::abs(eval_harmonic(m, z) - expected) < 1e-13);
    }
  }
}

TEST_CASE("evaluation outside the closed disk is rejected") {
  const HarmonicMap m{TaylorPoly({1.0}), TaylorPoly()};
  CHECK_THROWS_AS(eval_harmonic(m, {1.1, 0.0}), DomainError);
  CHECK_NOTHROW(eval_harmonic(m, {1.0, 0.0}));
}

TEST_CASE("polynomial helpers") {
  const TaylorPoly p({1.0, 2.0, 0.0, 0.0});
  CHECK(p.trimmed().degree() == 1);
  CHECK(TaylorPoly({0.0, 0.0}).trimmed().degree() == 0);
  CHECK(p.with_coeff(5, 3.0).degree() == 5);
  CHECK(p.with_coeff(5, 3.0).coeff(5) == cplx{3.0});
  CHECK(p.scaled({0.0, 1.0}).coeff(1) == cplx{0.0, 2.0});
  CHECK(p.coeff(42) == cplx{});
}

TEST_CASE("normalization and scaling keep the map's values") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const HarmonicMap m = random_harmonic(6, derive_seed(9, trial), Constraint::None);
    const HarmonicMap n = m.normalized();
    const cplx c{0.3, -1.2};
    const HarmonicMap s = m.scaled(c);
    CHECK(n.h.coeff(0) == cplx{});
    for (int i = 0; i < 10; ++i) {
      const cplx z = rng.unit_disk();
      CHECK(std::abs(n.value(z) - m.value(z)) < 1e-14);
      CHECK(std::abs(s.value(z) - c * m.value(z)) < 1e-13);
    }
  }
}

TEST_CASE("boundary series of simple maps") {
  const FourierSeries a = boundary_series({TaylorPoly({1.0, 1.0}), TaylorPoly()});
  CHECK(a[0] == cplx{1.0});
  CHECK(a[1] == cplx{1.0});
  CHECK(a[-1] == cplx{});

  const FourierSeries b = boundary_series({TaylorPoly(), TaylorPoly({0.0, 1.0})});
  CHECK(b[-1] == cplx{1.0});
  CHECK(b.nonzero().size() == 1);

  const FourierSeries c = boundary_series({TaylorPoly({0.0, 0.5}), TaylorPoly({0.0, 0.5})});
  CHECK(c[-1] == cplx{0.5});
  CHECK(c[1] == cplx{0.5});
  CHECK(c[0] == cplx{});
}

TEST_CASE("boundary series agrees with the map on the circle and inverts") {
  for (int trial = 0; trial < 50; ++trial) {
    const HarmonicMap m = random_harmonic(1 + trial % 8, derive_seed(21, trial), Constraint::None);
    const FourierSeries s = boundary_series(m);
    for (double t = -3.0; t < 3.2; t += 0.37) CHECK(std::abs(s(t) - m.value(std::polar(1.0, t))) < 1e-13);

    const HarmonicMap back = map_from_series(s);
    const HarmonicMap expected = m.normalized();
    for (std::size_t k = 0; k <= m.degree(); ++k) {
      CHECK(back.g.coeff(k) == expected.g.coeff(k));
      CHECK(back.h.coeff(k) == expected.h.coeff(k));
    }
  }
}

TEST_CASE("Fourier series grows when a higher mode is set") {
  FourierSeries s(1);
  s.set(1, 2.0);
  s.set(-4, {0.0, 1.0});
  CHECK(s.degree() == 4);
  CHECK(s[1] == cplx{2.0});
  CHECK(s[-4] == cplx{0.0, 1.0});
  CHECK(s[7] == cplx{});
  CHECK_THROWS_AS(FourierSeries(-1), std::invalid_argument);
}

TEST_CASE("seed derivation is splitmix64 of the index-advanced state") {
  CHECK(derive_seed(0, 0) == 0xE220A8397B1DCDAFULL);
  for (std::uint64_t seed : {0ULL, 1ULL, 123456789ULL})
    for (std::uint64_t i = 0; i < 50; ++i)
      CHECK(derive_seed(seed, i) == splitmix64(seed + 0x9e3779b97f4a7c15ULL * i));

  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(7, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("generator is the standard 64-bit Mersenne twister") {
  Rng rng(5489);
  CHECK(rng.next() == 14514284786278117030ULL);
  Rng draws(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = draws.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(std::abs(draws.unit_disk()) < 1.0);
  }
}

TEST_CASE("random maps are reproducible and honour their constraint") {
  const HarmonicMap a = random_harmonic(8, 77, Constraint::None);
  const HarmonicMap b = random_harmonic(8, 77, Constraint::None);
  CHECK(a == b);
  CHECK(map_to_json(a) == map_to_json(b));
  CHECK(!(a == random_harmonic(8, 78, Constraint::None)));
  CHECK(a.degree() == 8);

  for (std::uint64_t s = 0; s < 1000; ++s) {
    const HarmonicMap z = random_harmonic(3, s, Constraint::ReZero);
    CHECK((z.g.coeff(0) * z.h.coeff(0)).real() == 0.0);
    const HarmonicMap pos = random_harmonic(3, s, Constraint::ReNonNeg);
    CHECK((pos.g.coeff(0) * pos.h.coeff(0)).real() >= 0.0);
    const HarmonicMap neg = random_harmonic(3, s, Constraint::ReNonPos);
    CHECK((neg.g.coeff(0) * neg.h.coeff(0)).real() <= 0.0);
  }
  CHECK_THROWS_AS(random_harmonic(-1, 0, Constraint::None), std::invalid_argument);
}

TEST_CASE("constraint names round-trip") {
  for (Constraint c : {Constraint::None, Constraint::ReZero, Constraint::ReNonNeg, Constraint::ReNonPos})
    CHECK(constraint_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(constraint_from_string("RE_ANY"), std::invalid_argument);
}

TEST_CASE("Calderon boundary values") {
  // Small gamma: the map tends to the constant 1.
  const ExtremalParams tiny(1e-9, 1.5);
  for (double t : {0.3, 1.0, 2.0, 4.0, 6.0}) CHECK(std::abs(calderon_boundary(tiny, t) - 1.0) < 1e-7);

  // cot(t/2) vanishes at t = π; the double nearest π leaves cot ≈ 6e-17.
  CHECK(std::abs(calderon_boundary(ExtremalParams(0.5, 1.9), pi)) < 1e-5);

  // gamma = π/4 requires p < 2; at t = π/2 the value is e^{iγ}.
  const ExtremalParams g(pi / 4.0, 1.5);
  const cplx v = calderon_boundary(g, pi / 2.0);
  CHECK(std::abs(v - std::polar(1.0, pi / 4.0)) < 1e-15);
  CHECK(std::abs(v.real()) == doctest::Approx(std::abs(v.imag())));

  // Modulus |cot(t/2)|^{2γ/π}, argument +γ on the upper arc and -γ on the lower one.
  const ExtremalParams h(0.6, 1.5);
  for (double t : {0.2, 1.1, 2.5, 3.5, 5.0, 6.1}) {
    const cplx w = calderon_boundary(h, t);
    const double cot = 1.0 / std::tan(t / 2.0);
    CHECK(std::abs(w) == doctest::Approx(std::pow(std::abs(cot), 2.0 * 0.6 / pi)).epsilon(1e-14));
    CHECK(std::arg(w) == doctest::Approx(t < pi ? 0.6 : -0.6).epsilon(1e-14));
    // Radial limit of the principal power ((1+z)/(1-z))^a.
    const cplx z = std::polar(1.0 - 1e-10, t);
    CHECK(std::abs(std::pow((1.0 + z) / (1.0 - z), h.exponent()) - w) < 1e-6);
  }
  CHECK_THROWS_AS(calderon_boundary(h, 0.0), DomainError);
  CHECK_THROWS_AS(calderon_boundary(h, 2.0 * pi), DomainError);
}

TEST_CASE("Calderon parameters are validated") {
  CHECK_THROWS_AS(ExtremalParams(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(ExtremalParams(0.0, 1.5), DomainError);
  CHECK_THROWS_AS(ExtremalParams(pi / 3.0, 1.5), DomainError);
  CHECK_NOTHROW(ExtremalParams(0.995 * pi / 3.0, 1.5));
}

TEST_CASE("Calderon Taylor coefficients match the binomial convolution") {
  // ((1+z)/(1-z))^a = (1+z)^a (1-z)^{-a}; c_n = Σ_k C(a,k) C(a+n-k-1, n-k).
  const double a = 0.37;
  const std::size_t n = 20;
  std::vector<double> up(n + 1), down(n + 1);
  up[0] = down[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    up[k] = up[k - 1] * (a - static_cast<double>(k - 1)) / static_cast<double>(k);
    down[k] = down[k - 1] * (a + static_cast<double>(k - 1)) / static_cast<double>(k);
  }
  const TaylorPoly c = calderon_taylor(a, n);
  for (std::size_t m = 0; m <= n; ++m) {
    double expected = 0.0;
    for (std::size_t k = 0; k <= m; ++k) expected += up[k] * down[m - k];
    CHECK(c.coeff(m).real() == doctest::Approx(expected).epsilon(1e-13));
  }

  const cplx z{0.3, 0.2};
  const TaylorPoly long_series = calderon_taylor(a, 400);
  CHECK(std::abs(long_series(z) - std::pow((1.0 + z) / (1.0 - z), a)) < 1e-12);
}

TEST_CASE("map JSON round trip") {
  const HarmonicMap m = random_harmonic(5, 11, Constraint::None);
  const HarmonicMap back = map_from_json(map_to_json(m));
  CHECK(back == m);
  const std::string with_series = map_to_json({TaylorPoly({0.0, 0.5}), TaylorPoly({0.0, 0.5})}, true);
  CHECK(with_series.find("\"series\"") != std::string::npos);
  CHECK(map_from_json(with_series).g.coeff(1) == cplx{0.5});
}

TEST_CASE("malformed map JSON reports line and field") {
  try {
    map_from_json("{\n  \"g\": [[1, 0],\n  \"h\": []\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    map_from_json("{\n  \"g\": [[1, 0]]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.field() == "h");
  }
  try {
    map_from_json("{\n  \"g\": [[1, 0]],\n  \"h\": [[0, 0],\n    [1]]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.field() == "h[1]");
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(map_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(map_from_json("{\"g\": 3, \"h\": []}"), ParseError);
}
