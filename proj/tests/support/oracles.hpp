#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "supratoa/rational.hpp"

namespace oracle {

using supratoa::Rational;

// Partial sum of 0F1(;1;z) = sum z^n/(n!)^2 in exact arithmetic, with a bound
// on the dropped tail (terms decay geometrically once n^2 > 2|z|).
struct ExactSeries {
  Rational value;
  Rational tail_bound;
};

inline ExactSeries hyper0f1_exact(const Rational& z, int terms) {
  Rational sum;
  Rational term(1);
  for (int n = 0; n < terms; ++n) {
    sum += term;
    term = term * z / Rational(static_cast<long>(n + 1) * (n + 1));
  }
  // |term_N| (1 + 1/2 + 1/4 + ...) once |z|/(N+1)^2 <= 1/2
  return {sum, term.abs() * Rational(2)};
}

// Composite Simpson on [a, b] with n (even) panels. Independent of the
// adaptive Gauss-Kronrod machinery under test.
template <class F>
auto simpson(F&& f, double a, double b, int n) {
  using T = decltype(f(a));
  const double h = (b - a) / n;
  T s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * (h / 3.0);
}

}  // namespace oracle
