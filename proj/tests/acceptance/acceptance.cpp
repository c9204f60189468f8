// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
// Tolerances and runtime budgets are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "supratoa/classical_toa.hpp"
#include "supratoa/kernel_operator.hpp"
#include "supratoa/kernel_solver.hpp"
#include "supratoa/transforms.hpp"

using namespace supratoa;

namespace {

constexpr double kHarmonicTailCap = 1e-12;
constexpr double kIntegralFormTol = 1e-8;
constexpr double kCommutatorTol = 1e-6;
constexpr double kCorruptedFloor = 0.1;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

// Every kernel built by the criteria below; the last criterion runs the
// boundary check over all of them.
std::vector<GradedKernel> g_produced;

GradedKernel general(const Potential& v, const Rational& mu, int jmax) {
  g_produced.push_back(solve_kernel_general({v, mu, jmax, std::nullopt}));
  return g_produced.back();
}

GradedKernel keep(GradedKernel k) {
  g_produced.push_back(k);
  return k;
}

bool classical_matches(const GradedKernel& k, const MomentumSeries& toa, int kmax) {
  const MomentumSeries w = classical_limit(wigner_transform(k));
  for (int i = 0; i <= kmax; ++i) {
    if (w.term(i, 0) != toa.term(i, 0)) return false;
  }
  return true;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome harmonic_exactness() {
  Outcome o;
  const Potential v = Potential::harmonic(1, 1);
  const GradedKernel k = general(v, 1, 10);
  const MomentumSeries toa = local_toa(v, 1, 0, 10);
  o.require(classical_matches(k, toa, 10), "s=0 Wigner terms differ from local_toa");
  o.require(hbar2_residual(wigner_transform(k)).empty(), "harmonic kernel carries s>=1 terms");
  const double sum = toa.eval(0.2, 1.0);
  const double tail = toa_tail_bound(v, 1.0, 0.2, 0.0, 1.0, 10);
  const double err = std::abs(sum + std::atan(0.2));
  o.require(tail < kHarmonicTailCap, fmt("tail bound %.3g not below cap", tail));
  o.require(err <= tail + 4e-16, fmt("|partial sum + atan(0.2)| = %.3g exceeds tail %.3g", err, tail));
  if (o.pass) o.detail = fmt("|err| = %.2g, tail bound %.2g", err, tail);
  return o;
}

Outcome linear_purity() {
  Outcome o;
  testgen::Gen g(1001);
  for (int i = 0; i < 20; ++i) {
    const Potential v = Potential::linear(g.rational(), g.rational());
    const Rational mu = g.positive_rational();
    const GradedKernel k = general(v, mu, 8);
    o.require(k.grades_from(1).empty(), "nonzero s>=1 entry for " + v.poly().str());
    o.require(classical_matches(k, local_toa(v, mu, 0, 8), 8), "Wigner != local_toa for " + v.poly().str());
  }
  if (o.pass) o.detail = "20 random (a, b), Jmax = 8";
  return o;
}

Outcome nonlinear_obstruction() {
  Outcome o;
  const Potential v = Potential::quartic(1);
  const GradedKernel k = general(v, 1, 8);
  o.require(classical_matches(k, local_toa(v, 1, 0, 8), 8), "s=0 slice differs from local_toa");
  const MomentumSeries s1 = wigner_transform(k).grade_slice(1);
  o.require(!s1.empty(), "s=1 slice is empty");
  if (o.pass) o.detail = "s=1 slice has " + std::to_string(s1.size()) + " terms";
  return o;
}

Outcome weyl_agreement() {
  Outcome o;
  const std::vector<std::pair<std::string, Potential>> cases = {
      {"harmonic", Potential::harmonic(1, 1)},
      {"linear", Potential::linear(Rational(2, 3), Rational(-1, 5))},
      {"cubic", Potential(QPoly::monomial(3, Rational(3, 2)))},
      {"quartic", Potential::quartic(1)}};
  for (const auto& [name, v] : cases) {
    const Rational mu(1);
    const GradedKernel weyl = keep(weyl_quantize(local_toa(v, mu, 0, 6), mu, v));
    o.require(weyl.same_coefficients(keep(classical_kernel(v, mu, 6))), name + ": Weyl != classical term");
    if (name == "quartic") {
      o.require(!(general(v, mu, 6) - weyl).empty(), "quartic: full kernel equals Weyl kernel");
    }
  }
  if (o.pass) o.detail = "4 potentials, Jmax = 6; quartic obstruction witnessed";
  return o;
}

Outcome route_equivalence() {
  Outcome o;
  testgen::Gen g(1005);
  for (const auto& fam : testgen::potential_families(g)) {
    const Rational mu = g.positive_rational();
    for (const Rational& x : {Rational(0), Rational(1, 3)}) {
      for (int k = 0; k <= 8; ++k) {
        o.require(toa_iterate_closed(fam.v, mu, k, x) == toa_iterate_liouville(fam.v, mu, k, x),
                  fam.name + ": closed != Liouville at k = " + std::to_string(k));
      }
    }
  }
  for (int jmax = 0; jmax <= 8; ++jmax) {
    const Rational mu = g.positive_rational(), omega = g.positive_rational();
    const Rational lambda = g.nonzero_rational(), a = g.rational(), b = g.rational();
    const std::string j = " at Jmax = " + std::to_string(jmax);
    o.require(general(Potential::harmonic(mu, omega), mu, jmax)
                  .same_coefficients(keep(solve_kernel_harmonic(mu, omega, jmax))),
              "harmonic solver differs" + j);
    o.require(general(Potential::quartic(lambda), mu, jmax)
                  .same_coefficients(keep(solve_kernel_anharmonic(lambda, mu, jmax))),
              "anharmonic solver differs" + j);
    o.require(general(Potential::linear(a, b), mu, jmax).same_coefficients(keep(solve_kernel_linear(a, b, mu, jmax))),
              "linear solver differs" + j);
  }
  if (o.pass) o.detail = "6 families, k <= 8; 3 specialized solvers, Jmax <= 8";
  return o;
}

Outcome integral_form() {
  Outcome o;
  testgen::Gen g(1006);
  double worst = 0.0;
  for (const Potential& v : {Potential::harmonic(1, 1), Potential::quartic(1)}) {
    const EvaluableKernel series = series_kernel(keep(classical_kernel(v, 1, 14)), 1.0);
    for (int i = 0; i < 100; ++i) {
      const double q = g.real(-0.5, 0.5), qp = g.real(-0.5, 0.5);
      const double gap = std::abs(kernel_integral_form(v, 1.0, 1.0, q, qp, QuadSpec{1e-12}) - series.factor(q, qp));
      worst = std::max(worst, gap);
    }
  }
  o.require(worst < kIntegralFormTol, fmt("max gap %.3g", worst));
  if (o.pass) o.detail = fmt("max gap %.2g over 200 points", worst);
  return o;
}

Outcome commutator() {
  Outcome o;
  const BumpProfile phi(0.0, 0.5), psi(0.1, 0.5);
  const GradedKernel free_k = general(Potential::free(), 1, 0);
  const double r_free = commutator_residual(Potential::free(), series_kernel(free_k, 1.0), phi, psi).residual;
  const Potential harm = Potential::harmonic(1, 1);
  const double r_harm = commutator_residual(harm, series_kernel(general(harm, 1, 12), 1.0), phi, psi).residual;
  GradedKernel corrupted = free_k;
  corrupted.set(1, 0, 0, Rational(1, 2));
  const double r_bad = commutator_residual(Potential::free(), series_kernel(corrupted, 1.0), phi, psi).residual;
  o.require(r_free < kCommutatorTol, fmt("free r = %.3g", r_free));
  o.require(r_harm < kCommutatorTol, fmt("harmonic r = %.3g", r_harm));
  o.require(r_bad > kCorruptedFloor, fmt("corrupted seed r = %.3g", r_bad));
  if (o.pass) {
    std::ostringstream s;
    s << "r_free = " << r_free << ", r_harm = " << r_harm << ", r_corrupted = " << r_bad;
    o.detail = s.str();
  }
  return o;
}

Outcome linear_identity() {
  // sum_j sigma_kj b^(k-j) a^j u^(2k+1-j) = 2^(2k+1) (2k-1)!!/(2k)! int_0^(u/2) (V(u/2) - V(t))^k dt
  Outcome o;
  testgen::Gen g(1008);
  const auto sigma = linear_sigma_table(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = g.rational(), b = g.rational();
    const QPoly v = Potential::linear(a, b).poly();
    const QPoly v_half = v.scaled(Rational(1, 2));
    for (int k = 0; k <= 5; ++k) {
      QPoly lhs;
      for (int j = 0; j <= k; ++j) {
        const auto it = sigma.find({k, j});
        if (it != sigma.end()) lhs += QPoly::monomial(2 * k + 1 - j, it->second * b.pow(k - j) * a.pow(j));
      }
      QPoly integral;
      for (int i = 0; i <= k; ++i) {
        Rational c = Rational::binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
        if (i % 2 == 1) c = -c;
        integral += v_half.pow(static_cast<unsigned>(k - i)) *
                    v.pow(static_cast<unsigned>(i)).antiderivative().scaled(Rational(1, 2)) * c;
      }
      const Rational scale = Rational(2).pow(2 * k + 1) * Rational::odd_double_factorial(static_cast<unsigned>(k)) /
                             Rational::factorial(static_cast<unsigned>(2 * k));
      o.require(lhs == integral * scale, "mismatch at k = " + std::to_string(k) + " for " + v.str());
    }
  }
  if (o.pass) o.detail = "10 random linear potentials, k <= 5";
  return o;
}

Outcome arrival_point() {
  Outcome o;
  const Potential v(QPoly::monomial(2, 1));
  const Rational x(1, 2);
  const Potential shifted = shift_arrival(v, x);
  const GradedKernel k = general(shifted, 1, 6);
  const MomentumSeries classical = classical_limit(wigner_transform(k)).shifted(-x);
  const MomentumSeries toa = local_toa(v, 1, x, 6);
  for (int i = 0; i <= 6; ++i) {
    o.require(classical.term(i, 0) == toa.term(i, 0), "shifted classical limit differs at k = " + std::to_string(i));
  }
  double worst = 0.0;
  for (const auto& [q, p] : {std::pair{0.6, 2.0}, std::pair{0.3, 1.5}, std::pair{0.75, 3.0}}) {
    const double series = toa.eval(q, p);
    const ToaQuadratureResult quad = toa_quadrature(v, {q, p, 0.5, 1.0}, 1e-13);
    const double tail = toa_tail_bound(v, 1.0, q, 0.5, p, 6);
    const double gap = std::abs(series - quad.value);
    o.require(gap <= tail + quad.error_estimate + 1e-14, fmt("q = %.2f: gap %.3g beyond tail bound", q, gap));
    worst = std::max(worst, gap);
  }
  if (o.pass) o.detail = fmt("k <= 6 exact; max quadrature gap %.2g", worst);
  return o;
}

Outcome structure() {
  Outcome o;
  testgen::Gen g(1010);
  auto families = testgen::potential_families(g);
  families.push_back({"harmonic", Potential::harmonic(1, 1)});
  for (const auto& fam : families) {
    const UngradedKernel u = solve_kernel_ungraded(fam.v, Rational(3, 7), 13, 4 * 7 + 1);
    o.require(u.odd_powers_vanish(), fam.name + ": odd v-power survives");
    o.require(u.at(1, 0) == Rational(1, 4), fam.name + ": ungraded seed lost");
  }

  const GradedKernel quartic = general(Potential::quartic(1), 1, 5);
  std::set<std::pair<int, int>> support;
  for (const auto& [idx, _] : quartic.entries()) support.emplace(idx.m, 2 * idx.j);
  const std::set<std::pair<int, int>> table = {{1, 0},  {5, 2},  {9, 4},  {3, 4},   {13, 6},  {7, 6},
                                               {17, 8}, {11, 8}, {5, 8},  {21, 10}, {15, 10}, {9, 10}};
  o.require(support == table, "quartic (u, v) support differs from the table");
  const GradedKernel scaled_quartic = general(Potential::quartic(Rational(-2, 3)), Rational(5, 2), 8);
  for (const auto& [idx, _] : scaled_quartic.entries()) {
    const int kk = (4 * idx.j + 1 - idx.m) / 6;
    o.require((4 * idx.j + 1 - idx.m) % 6 == 0 && idx.s == kk && idx.j >= 2 * kk, "quartic support law broken");
  }

  std::size_t checked = 0;
  for (const GradedKernel& k : g_produced) {
    const BoundaryReport rep = boundary_check(k);
    o.require(rep.passed(), "boundary check: " + (rep.failures.empty() ? std::string() : rep.failures.front()));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(families.size()) + " ungraded families; boundary check on " +
                         std::to_string(checked) + " kernels";
  return o;
}

struct Criterion {
  const char* name;
  double budget_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Harmonic exactness", 5, harmonic_exactness},
      {"Linear purity", 10, linear_purity},
      {"Nonlinear obstruction", 10, nonlinear_obstruction},
      {"Weyl agreement and failure", 60, weyl_agreement},
      {"Route equivalence", 60, route_equivalence},
      {"Integral form", 30, integral_form},
      {"Commutator", 60, commutator},
      {"Linear identity", 60, linear_identity},
      {"Arbitrary arrival point", 60, arrival_point},
      {"Structure theorems", 60, structure},
  };
  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.require(false, fmt("runtime %.2f s over budget %.0f s", secs, c.budget_s));
    if (!o.pass) ++failures;
    std::printf("[%s] %d. %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", n, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
