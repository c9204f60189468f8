#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "generators.hpp"
#include "supratoa/classical_toa.hpp"
#include "supratoa/errors.hpp"

using namespace supratoa;

namespace {
QPoly mono(int d, const Rational& c) { return QPoly::monomial(d, c); }
}  // namespace

TEST_CASE("closed-form iterates: hand examples") {
  const Rational mu(3, 2);
  const Rational omega(2, 5);
  CHECK(toa_iterate_closed(Potential::free(), mu, 0, 0) == mono(1, -mu));
  CHECK(toa_iterate_closed(Potential::harmonic(mu, omega), mu, 1, 0) ==
        mono(3, -Rational(1, 3) * mu.pow(3) * omega.pow(2)));
  const Rational lambda(7, 3);
  CHECK(toa_iterate_closed(Potential::quartic(lambda), mu, 1, 0) == mono(5, -Rational(4, 5) * mu.pow(2) * lambda));
}

TEST_CASE("closed-form seed is -mu (q - x)") {
  testgen::Gen g(21);
  for (int i = 0; i < 20; ++i) {
    const Potential v(g.poly(5));
    const Rational mu = g.positive_rational();
    const Rational x = g.rational();
    const QPoly expected = (QPoly::variable() - QPoly(x)) * (-mu);
    CHECK(toa_iterate_closed(v, mu, 0, x) == expected);
    CHECK(toa_iterate_liouville(v, mu, 0, x) == expected);
  }
}

TEST_CASE("Liouville iterates: hand examples") {
  const Rational mu(5, 3);
  const Rational omega(3, 2);
  CHECK(toa_iterate_liouville(Potential::harmonic(mu, omega), mu, 2, 0) ==
        mono(5, -Rational(1, 5) * mu.pow(5) * omega.pow(4)));
  const Rational a(-4, 7);
  CHECK(toa_iterate_liouville(Potential::linear(a, 0), mu, 1, 0) == mono(2, -Rational(1, 2) * mu.pow(2) * a));
}

TEST_CASE("closed form and Liouville route agree for k <= 8") {
  testgen::Gen g(22);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational mu = g.positive_rational(5, 4);
    const Rational x = trial == 0 ? Rational(0) : g.rational(3, 4);
    for (const auto& fam : testgen::potential_families(g)) {
      for (int k = 0; k <= 8; ++k) {
        INFO(fam.name << " k=" << k << " x=" << x);
        CHECK(toa_iterate_closed(fam.v, mu, k, x) == toa_iterate_liouville(fam.v, mu, k, x));
      }
    }
  }
}

TEST_CASE("local_toa: harmonic partial sum matches the arctan expansion") {
  const Rational mu(2), omega(3, 2);
  const MomentumSeries t = local_toa(Potential::harmonic(mu, omega), mu, 0, 2);
  MomentumSeries expected;
  for (int k = 0; k <= 2; ++k) {
    // -(1/omega) (-1)^k/(2k+1) (mu omega q)^(2k+1)
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    expected.add(k, 0, mono(2 * k + 1, -sign * mu.pow(2 * k + 1) * omega.pow(2 * k) / Rational(2 * k + 1)));
  }
  CHECK(t == expected);
}

TEST_CASE("local_toa: free particle has a single term") {
  for (int kmax : {0, 1, 5, 12}) {
    const MomentumSeries t = local_toa(Potential::free(), Rational(3), 0, kmax);
    REQUIRE(t.size() == 1);
    CHECK(t.term(0) == mono(1, Rational(-3)));
  }
}

TEST_CASE("local_toa: quartic K = 1") {
  const Rational mu(1, 2), lambda(5);
  MomentumSeries expected;
  expected.add(0, 0, mono(1, -mu));
  expected.add(1, 0, mono(5, Rational(4, 5) * mu.pow(2) * lambda));
  CHECK(local_toa(Potential::quartic(lambda), mu, 0, 1) == expected);
}

TEST_CASE("local_toa is odd in p") {
  testgen::Gen g(23);
  const MomentumSeries t = local_toa(Potential(g.poly(4)), Rational(1), 0, 6);
  for (const auto& [idx, poly] : t.terms()) CHECK(idx.s == 0);
  for (int i = 0; i < 50; ++i) {
    const double q = g.real(-0.3, 0.3);
    const double p = g.real(0.5, 3.0);
    CHECK(t.eval(q, -p) == Catch::Approx(-t.eval(q, p)).margin(1e-15));
  }
}

TEST_CASE("toa_quadrature: free particle and harmonic oscillator") {
  const auto free = toa_quadrature(Potential::free(), {1.0, 1.0, 0.0, 1.0}, 1e-13);
  CHECK(std::abs(free.value + 1.0) < 1e-13);
  const auto harm = toa_quadrature(Potential::harmonic(1, 1), {0.2, 1.0, 0.0, 1.0}, 1e-13);
  CHECK(std::abs(harm.value + std::atan(0.2)) < 1e-12);
  CHECK(harm.error_estimate <= 1e-13);
  const auto back = toa_quadrature(Potential::harmonic(1, 1), {0.2, -1.0, 0.0, 1.0}, 1e-13);
  CHECK(std::abs(back.value - std::atan(0.2)) < 1e-12);
}

TEST_CASE("toa_quadrature: quartic agrees with the local series within its tail bound") {
  const Potential v = Potential::quartic(1);
  const PhasePoint pt{0.1, 1.0, 0.0, 1.0};
  const auto quad = toa_quadrature(v, pt, 1e-14);
  for (int kmax : {0, 1, 2, 4}) {
    const double series = local_toa(v, 1, 0, kmax).eval(pt.q, pt.p);
    const double tail = toa_tail_bound(v, 1.0, pt.q, 0.0, pt.p, kmax);
    INFO("kmax=" << kmax << " tail=" << tail);
    CHECK(std::abs(series - quad.value) <= tail + quad.error_estimate + 1e-15);
  }
}

TEST_CASE("toa_quadrature error paths") {
  CHECK_THROWS_AS(toa_quadrature(Potential::free(), {1.0, 0.0, 0.0, 1.0}, 1e-10), ZeroMomentum);
  // E = 0.005 + 2 < V(q') near q' = 2 is fine, but the barrier V = 4 - q^2 at 0 blocks.
  const Potential barrier(QPoly(QPoly::Terms{{0, 4}, {2, -1}}));
  CHECK_THROWS_AS(toa_quadrature(barrier, {1.5, 0.1, -1.5, 1.0}, 1e-10), NotAccessible);
  // turning point exactly at the arrival point
  CHECK_THROWS_AS(toa_quadrature(Potential::harmonic(1, 1), {0.0, 1.0, std::sqrt(1.0), 1.0}, 1e-10), NotAccessible);
  CHECK_THROWS_AS(toa_quadrature(Potential::free(), {1.0, 1.0, 0.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("convergence margin examples") {
  const auto free = convergence_margin(Potential::free(), 1.0, 0.7, 0.0, 2.0);
  CHECK(free.ratio == 0.0);
  CHECK(free.converges);
  const auto near = convergence_margin(Potential::harmonic(1, 1), 1.0, 0.2, 0.0, 1.0);
  CHECK(near.max_deviation == Catch::Approx(0.02).epsilon(1e-12));
  CHECK(near.ratio == Catch::Approx(0.02).epsilon(1e-12));
  CHECK(near.converges);
  const auto far = convergence_margin(Potential::harmonic(1, 1), 1.0, 2.0, 0.0, 1.0);
  CHECK(far.ratio == Catch::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(far.converges);
  CHECK_THROWS_AS(convergence_margin(Potential::free(), 1.0, 0.0, 0.0, 0.0), ZeroMomentum);
}

TEST_CASE("potential range finds interior extrema") {
  // V = q^3 - q has extrema at +-1/sqrt(3)
  const Potential v(QPoly(QPoly::Terms{{1, -1}, {3, 1}}));
  const auto r = potential_range(v, -1.0, 1.0);
  const double ext = 2.0 / (3.0 * std::sqrt(3.0));
  CHECK(r.max == Catch::Approx(ext).epsilon(1e-13));
  CHECK(r.min == Catch::Approx(-ext).epsilon(1e-13));
}

TEST_CASE("series and quadrature agree inside the convergence region") {
  testgen::Gen g(24);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 60; ++i) {
    auto fams = testgen::potential_families(g);
    const auto& fam = fams[static_cast<std::size_t>(g.integer(0, 5))];
    const Rational mu_r(g.integer(2, 8), 4);
    const Rational x_r(g.integer(-4, 4), 8);
    const double mu = mu_r.to_double();
    const double x = x_r.to_double();
    const double q = x + g.real(-0.6, 0.6);
    const double p = (g.integer(0, 1) ? 1.0 : -1.0) * g.real(0.5, 3.0);
    const auto margin = convergence_margin(fam.v, mu, q, x, p);
    if (!(margin.ratio < 0.25) || q == x) continue;
    const PhasePoint pt{q, p, x, mu};
    const auto quad = toa_quadrature(fam.v, pt, 1e-14);
    // Evaluated in q - x: the monomial expansion about the origin cancels badly near q = x.
    const double series = local_toa(shift_arrival(fam.v, x_r), mu_r, 0, 12).eval(q - x, p);
    const double tail = toa_tail_bound(fam.v, mu, q, x, p, 12);
    INFO(fam.name << " q=" << q << " p=" << p << " x=" << x_r << " tail=" << tail);
    CHECK(std::abs(series - quad.value) <= 2.0 * tail + quad.error_estimate + 1e-13);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("shift_arrival examples") {
  const Potential v(QPoly::monomial(2));
  CHECK(shift_arrival(v, 0) == v);
  CHECK(shift_arrival(v, 1).poly() == QPoly(QPoly::Terms{{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("shifted origin problem reproduces arrival at x") {
  const Potential v(QPoly::monomial(2));
  for (const Rational& x : {Rational(1, 2), Rational(-3, 4), Rational(2)}) {
    const MomentumSeries origin = local_toa(shift_arrival(v, x), Rational(1), 0, 3);
    const MomentumSeries direct = local_toa(v, Rational(1), x, 3);
    // P~(q~) at q~ = q - x equals P(q)
    CHECK(origin.shifted(-x) == direct);
    CHECK(direct.shifted(x) == origin);
  }
}
