#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "supratoa/errors.hpp"

namespace supratoa {

enum class QuadRule { GaussKronrod7_15 };

struct QuadSpec {
  double abs_tol = 1e-12;
  int max_depth = 50;
  QuadRule rule = QuadRule::GaussKronrod7_15;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
  int depth = 0;
  friend bool operator<(const Panel& x, const Panel& y) { return x.error < y.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod_15(F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kKronrodWeights[i];
    if (i % 2 == 1) gauss += (f1 + f2) * kGaussWeights[i / 2];
  }
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = magnitude(T((kronrod - gauss) * half));
  p.depth = depth;
  return p;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 quadrature with an absolute error
/// target. The panel with the largest error estimate is bisected until the
/// summed estimate meets spec.abs_tol. Throws QuadratureFailure if a panel
/// would exceed spec.max_depth bisections.
template <class F>
auto integrate(F&& f, double a, double b, const QuadSpec& spec) {
  using T = std::decay_t<decltype(f(a))>;
  QuadResult<T> result;
  if (a == b) return result;
  if (!(std::isfinite(a) && std::isfinite(b))) throw QuadratureFailure("non-finite integration bounds");
  const double sign = b < a ? -1.0 : 1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::priority_queue<detail::Panel<T>> panels;
  panels.push(detail::gauss_kronrod_15<T>(f, lo, hi, 0));
  result.evaluations = 15;
  T total = panels.top().value;
  double total_error = panels.top().error;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (total_error > spec.abs_tol) {
    // Roundoff floor: the remaining error is below what doubles can resolve.
    if (total_error <= 50.0 * eps * detail::magnitude(total)) break;
    detail::Panel<T> worst = panels.top();
    panels.pop();
    if (worst.depth >= spec.max_depth) {
      throw QuadratureFailure("quadrature tolerance " + std::to_string(spec.abs_tol) +
                              " unreachable at max depth; error estimate " + std::to_string(total_error));
    }
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid, worst.depth + 1);
    auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b, worst.depth + 1);
    result.evaluations += 30;
    total += (left.value + right.value) - worst.value;
    total_error += (left.error + right.error) - worst.error;
    panels.push(std::move(left));
    panels.push(std::move(right));
  }

  // Re-sum to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  if (!std::isfinite(detail::magnitude(sum))) throw QuadratureFailure("non-finite integrand value");
  result.value = sum * sign;
  result.error = err;
  return result;
}

/// Integrates over consecutive breakpoints, one adaptive run per piece, each
/// piece receiving a share of the tolerance proportional to its length.
template <class F>
auto integrate_pieces(F&& f, const std::vector<double>& breaks, const QuadSpec& spec) {
  using T = std::decay_t<decltype(f(0.0))>;
  QuadResult<T> out;
  if (breaks.size() < 2) return out;
  const double span = std::abs(breaks.back() - breaks.front());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double len = std::abs(breaks[i + 1] - breaks[i]);
    if (len == 0.0) continue;
    QuadSpec piece = spec;
    piece.abs_tol = spec.abs_tol * (span > 0.0 ? len / span : 1.0);
    auto r = integrate(f, breaks[i], breaks[i + 1], piece);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
  }
  return out;
}

}  // namespace supratoa
