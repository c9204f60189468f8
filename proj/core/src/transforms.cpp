#include "supratoa/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "supratoa/errors.hpp"

namespace supratoa {

MomentumSeries wigner_transform(const GradedKernel& k) {
  MomentumSeries out;
  const Rational half_mu = k.mu() / Rational(2);
  for (const auto& [idx, a] : k.entries()) {
    const Rational sign = idx.j % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational c = Rational(-2) * k.mu() * Rational(2).pow(idx.m) * a *
                       Rational::factorial(static_cast<unsigned>(2 * idx.j)) * sign * half_mu.pow(idx.j - idx.s);
    out.add(idx.j, idx.s, QPoly::monomial(idx.m, c));
  }
  return out;
}

MomentumSeries classical_limit(const MomentumSeries& t) { return t.grade_slice(0); }

MomentumSeries hbar2_residual(const MomentumSeries& t) { return t.grades_from(1); }

GradedKernel weyl_quantize(const MomentumSeries& t, const Rational& mu, const Potential& v) {
  int jmax = 0;
  int mmax = 1;
  for (const auto& [idx, poly] : t.terms()) {
    if (idx.s != 0) {
      throw GradeError("Weyl quantization needs a classical series; found a term at hbar grade s = " +
                       std::to_string(idx.s));
    }
    if (poly.coeff(0) != Rational(0)) {
      throw std::domain_error("q^0 term at k = " + std::to_string(idx.k) + " has no kernel preimage");
    }
    jmax = std::max(jmax, idx.k);
    mmax = std::max(mmax, poly.degree());
  }
  GradedKernel out(v, mu, jmax, mmax);
  for (const auto& [idx, poly] : t.terms()) {
    const int k = idx.k;
    const Rational sign = k % 2 == 0 ? Rational(-1) : Rational(1);
    const Rational scale = sign * Rational(2).pow(k) / (mu.pow(k + 1) * Rational::factorial(static_cast<unsigned>(2 * k)));
    for (const auto& [a, c] : poly.terms()) out.add(a, k, 0, c * scale / Rational(2).pow(a + 1));
  }
  return out;
}

}  // namespace supratoa
