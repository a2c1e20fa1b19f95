#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rieszlab/error.hpp"
#include "rieszlab/hilbert.hpp"
#include "rieszlab/norms.hpp"

using namespace rieszlab;
using std::numbers::pi;

namespace {

FourierSeries random_series(int degree, Rng& rng, bool zero_mean) {
  FourierSeries s(degree);
  for (int k = -degree; k <= degree; ++k) s.set(k, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  if (zero_mean) s.set(0, 0.0);
  return s;
}

FourierSeries cosine_series() {
  FourierSeries s(1);
  s.set(1, 0.5);
  s.set(-1, 0.5);
  return s;
}

}  // namespace

TEST_CASE("multiplier on the classical pairs") {
  FourierSeries sine(1);
  sine.set(1, cplx{0.0, -0.5});
  sine.set(-1, cplx{0.0, 0.5});
  CHECK(periodic_hilbert(cosine_series()) == sine);

  FourierSeries minus_cosine(1);
  minus_cosine.set(1, -0.5);
  minus_cosine.set(-1, -0.5);
  CHECK(periodic_hilbert(sine) == minus_cosine);

  for (int k = 1; k <= 5; ++k) {
    FourierSeries mode(k);
    mode.set(k, 1.0);
    CHECK(periodic_hilbert(mode)[k] == cplx{0.0, -1.0});
  }

  FourierSeries one(0);
  one.set(0, 1.0);
  CHECK(periodic_hilbert(one)[0] == cplx{0.0, -1.0});
}

TEST_CASE("H is linear and squares to minus the identity") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const FourierSeries x = random_series(1 + trial % 16, rng, false);
    const FourierSeries y = random_series(1 + trial % 16, rng, false);
    const FourierSeries hx = periodic_hilbert(x), hy = periodic_hilbert(y);
    const FourierSeries twice = periodic_hilbert(hx);
    FourierSeries sum(x.degree());
    for (int k = -x.degree(); k <= x.degree(); ++k) sum.set(k, x[k] + 2.0 * y[k]);
    const FourierSeries hsum = periodic_hilbert(sum);
    for (int k = -x.degree(); k <= x.degree(); ++k) {
      CHECK(twice[k] == -x[k]);
      CHECK(std::abs(hsum[k] - (hx[k] + 2.0 * hy[k])) < 1e-15);
    }
  }
}

TEST_CASE("singular integral annihilates constants and reproduces sin") {
  FourierSeries constant(0);
  constant.set(0, 3.0);
  for (double tau : {-2.0, 0.0, 1.0}) CHECK(std::abs(singular_hilbert_at(constant, tau, 1e-6)) == 0.0);

  const cplx at_zero = singular_hilbert_at(cosine_series(), 0.0, 1e-6);
  CHECK(std::abs(at_zero) < 1e-12);
  for (double tau : {0.4, 1.7, -2.5}) CHECK(std::abs(singular_hilbert_at(cosine_series(), tau, 1e-6) - std::sin(tau)) < 1e-10);
}

TEST_CASE("singular form matches the multiplier form on zero-mean traces") {
  Rng rng(47);
  for (int degree : {1, 4, 9, 16}) {
    const FourierSeries x = random_series(degree, rng, true);
    const FourierSeries hx = periodic_hilbert(x);
    for (int j = 0; j < 6; ++j) {
      const double tau = rng.uniform(-pi, pi);
      CHECK(std::abs(singular_hilbert_at(x, tau, 1e-6) - hx(tau)) < 1e-6);
    }
  }
}

TEST_CASE("arc correction raises the truncation order from one to three") {
  Rng rng(48);
  const FourierSeries x = random_series(16, rng, true);
  const FourierSeries hx = periodic_hilbert(x);
  SingularOptions plain;
  plain.arc_correction = false;
  const double tau = 0.77;
  const double e1 = std::abs(singular_hilbert_at(x, tau, 1e-3, plain) - hx(tau));
  const double e2 = std::abs(singular_hilbert_at(x, tau, 1e-4, plain) - hx(tau));
  CHECK(e1 > 1e-6);
  CHECK(e1 / e2 == doctest::Approx(10.0).epsilon(0.05));
  const double c1 = std::abs(singular_hilbert_at(x, tau, 2e-3) - hx(tau));
  const double c2 = std::abs(singular_hilbert_at(x, tau, 1e-3) - hx(tau));
  CHECK(c2 < 1e-4 * e1);
  CHECK(c1 / c2 == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("conjugate map agrees with the multiplier on coefficients") {
  const HarmonicMap identity{TaylorPoly({0.0, 1.0}), TaylorPoly()};
  const HarmonicMap conj_identity = conjugate_map(identity);
  CHECK(conj_identity.g.coeff(1) == cplx{0.0, -1.0});

  const HarmonicMap cosine{TaylorPoly({0.0, 0.5}), TaylorPoly({0.0, 0.5})};
  const FourierSeries sine = boundary_series(conjugate_map(cosine));
  CHECK(sine[1] == cplx{0.0, -0.5});
  CHECK(sine[-1] == cplx{0.0, 0.5});

  for (int trial = 0; trial < 50; ++trial) {
    const HarmonicMap m = random_harmonic(1 + trial % 8, derive_seed(12, trial), Constraint::None);
    CHECK(boundary_series(conjugate_map(m)) == periodic_hilbert(boundary_series(m)));
  }
}

TEST_CASE("conjugate of a real map splits off its value at the origin") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    // f = g + conj(h) is real when h_k = g_k (k ≥ 1) and g_0 + conj(h_0) is real.
    TaylorPoly g = random_taylor(5, rng);
    const double shared_imag = g.coeff(0).imag();
    const TaylorPoly h = g.with_coeff(0, {rng.uniform(-1.0, 1.0), shared_imag});
    const HarmonicMap f{g, h};
    CHECK(h.coeff(0) != cplx{});
    const HarmonicMap ft = conjugate_map(f);
    const cplx at_origin = ft.value(0.0);
    for (int i = 0; i < 50; ++i) {
      const cplx z = rng.unit_disk();
      CHECK(std::abs(f.value(z).imag()) < 1e-13);
      const cplx hat = ft.value(z) - at_origin;
      CHECK(std::norm(hat) == doctest::Approx(std::norm(ft.value(z)) - std::norm(at_origin)).epsilon(1e-11));
    }
  }
}

TEST_CASE("line pair catalog values") {
  const auto lorentz = line_pair_values({LinePairKind::Lorentzian, 1.0}, 0.0);
  CHECK(lorentz.first == 1.0);
  CHECK(lorentz.second == 0.0);

  const auto poisson = line_pair_values({LinePairKind::PoissonKernel, 1.0}, 1.0);
  CHECK(poisson.first == doctest::Approx(1.0 / (2.0 * pi)));
  CHECK(poisson.second == doctest::Approx(1.0 / (2.0 * pi)));

  const auto indicator = line_pair_values({LinePairKind::Indicator, 1.0}, 3.0);
  CHECK(indicator.first == 0.0);
  CHECK(indicator.second == doctest::Approx(std::log(2.0) / pi));
  CHECK_THROWS_AS(line_pair_values({LinePairKind::Indicator, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(line_pair_values({LinePairKind::PoissonKernel, -1.0}, 1.0), DomainError);
}

TEST_CASE("principal-value transform reproduces the catalog conjugates") {
  const LinePair pairs[] = {{LinePairKind::PoissonKernel, 0.5},
                            {LinePairKind::PoissonKernel, 2.0},
                            {LinePairKind::Lorentzian, 1.0},
                            {LinePairKind::Indicator, 1.0}};
  for (const LinePair& pair : pairs) {
    const std::vector<double> breaks = pair.breakpoints();
    auto phi = [&](double x) { return line_pair_values(pair, x).first; };
    for (double x : {-3.0, -0.4, 0.3, 2.5}) {
      const double expected = line_pair_values(pair, x).second;
      CHECK(line_hilbert_pv(phi, x, breaks) == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("line norms in closed form") {
  // ∫ (1+x²)^{-2} = ∫ x²(1+x²)^{-2} = π/2, so H is an isometry here.
  const LinePair lorentz{LinePairKind::Lorentzian, 1.0};
  auto phi = [&](double x) { return line_pair_values(lorentz, x).first; };
  auto conj = [&](double x) { return line_pair_values(lorentz, x).second; };
  CHECK(line_lp_norm(phi, 2.0) == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-10));
  CHECK(line_lp_norm(conj, 2.0) == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-10));

  // ∫ P_y² = 1/(2πy); ∫ P_y = 1.
  const LinePair poisson{LinePairKind::PoissonKernel, 0.5};
  auto kernel = [&](double x) { return line_pair_values(poisson, x).first; };
  CHECK(line_lp_norm(kernel, 2.0) == doctest::Approx(std::sqrt(1.0 / pi)).epsilon(1e-10));
  CHECK(line_lp_norm(kernel, 1.0) == doctest::Approx(1.0).epsilon(1e-10));

  const double breaks[] = {-1.0, 1.0};
  auto box = [](double x) { return std::abs(x) < 1.0 ? 1.0 : 0.0; };
  CHECK(line_lp_norm(box, 3.0, breaks) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(line_lp_norm(box, 0.0, breaks), DomainError);
}

TEST_CASE("empirical Hilbert ratio at p = 2 and for the cosine") {
  std::vector<HarmonicMap> maps;
  for (int i = 0; i < 20; ++i) {
    HarmonicMap m = random_harmonic(1 + i % 8, derive_seed(55, i), Constraint::None);
    maps.push_back({m.g.with_coeff(0, 0.0), m.h.with_coeff(0, 0.0)});
  }
  CHECK(empirical_hilbert_ratio(2.0, maps) == doctest::Approx(1.0).epsilon(1e-10));

  std::vector<HarmonicMap> with_means;
  for (int i = 0; i < 20; ++i) {
    const HarmonicMap m = random_harmonic(1 + i % 8, derive_seed(56, i), Constraint::None);
    with_means.push_back({m.g, m.h.with_coeff(0, 0.0)});
  }
  CHECK(empirical_hilbert_ratio(2.0, with_means) <= 1.0 + 1e-10);

  const HarmonicMap cosine[] = {{TaylorPoly({0.0, 0.5}), TaylorPoly({0.0, 0.5})}};
  CHECK(empirical_hilbert_ratio(4.0, cosine) == doctest::Approx(1.0).epsilon(1e-13));

  const HarmonicMap bad[] = {{TaylorPoly({0.0, 1.0}), TaylorPoly({1.0})}};
  CHECK_THROWS_AS(empirical_hilbert_ratio(2.0, bad), std::invalid_argument);
}

TEST_CASE("empirical ratio of truncated Calderon traces approaches tan(gamma) from below") {
  // The discretized trace converges logarithmically slowly (membership
  // exponent 0.995), so only monotone growth below the limit is asserted.
  const double p = 1.5, gamma = 0.995 * pi / 3.0;
  const double a = 2.0 * gamma / pi;
  double previous = 0.0;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const TaylorPoly g = calderon_taylor(a, n);
    // u = Re g as a harmonic map with h(0) = 0.
    const HarmonicMap u{g.scaled(0.5).with_coeff(0, g.coeff(0).real()), g.scaled(0.5).with_coeff(0, 0.0)};
    const HarmonicMap maps[] = {u};
    const double ratio = empirical_hilbert_ratio(p, maps);
    CHECK(ratio > previous);
    CHECK(ratio < std::tan(gamma));
    previous = ratio;
  }
  CHECK(previous > 1.0);
}
