#include "supratoa/classical_toa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "supratoa/errors.hpp"

namespace supratoa {

QPoly toa_iterate_closed(const Potential& v, const Rational& mu, int k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("iterate index must be >= 0");
  // (V(q) - V(q'))^k = sum_i C(k,i) V(q)^(k-i) (-V(q'))^i, so the q' integral
  // reduces to antiderivatives W_i of V^i evaluated at q and at x.
  const QPoly& pv = v.poly();
  QPoly integral;
  for (int i = 0; i <= k; ++i) {
    const QPoly w = pv.pow(static_cast<unsigned>(i)).antiderivative();
    const QPoly bracket = w - QPoly(w(x));
    Rational c = Rational::binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
    if (i % 2 == 1) c = -c;
    integral += pv.pow(static_cast<unsigned>(k - i)) * bracket * c;
  }
  const Rational prefactor =
      -Rational::odd_double_factorial(static_cast<unsigned>(k)) / Rational::factorial(static_cast<unsigned>(k)) *
      mu.pow(k + 1);
  return integral * prefactor;
}

namespace {

// coeff(q) * p^-power
struct MomentumTerm {
  QPoly coeff;
  int power = 1;
};

MomentumTerm d_dp(const MomentumTerm& t) { return {t.coeff * Rational(-t.power), t.power + 1}; }

// -(mu/p) int_x^q V'(q') t(q', p) dq'
MomentumTerm inverse_kinetic_liouvillian(const MomentumTerm& t, const QPoly& dv, const Rational& mu,
                                         const Rational& x) {
  const QPoly prim = (dv * t.coeff).antiderivative();
  return {(prim - QPoly(prim(x))) * (-mu), t.power + 1};
}

}  // namespace

QPoly toa_iterate_liouville(const Potential& v, const Rational& mu, int k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("iterate index must be >= 0");
  const QPoly dv = v.poly().derivative();
  MomentumTerm t{(QPoly::variable() - QPoly(x)) * (-mu), 1};
  for (int i = 1; i <= k; ++i) t = inverse_kinetic_liouvillian(d_dp(t), dv, mu, x);
  if (t.power != 2 * k + 1) throw std::logic_error("p-power bookkeeping broke");
  return t.coeff;
}

MomentumSeries local_toa(const Potential& v, const Rational& mu, const Rational& x, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  MomentumSeries out;
  for (int k = 0; k <= kmax; ++k) {
    const QPoly pk = toa_iterate_closed(v, mu, k, x);
    out.add(k, 0, k % 2 == 0 ? pk : -pk);
  }
  return out;
}

PotentialRange potential_range(const Potential& v, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  PotentialRange r{std::min(v(lo), v(hi)), std::max(v(lo), v(hi))};
  if (lo == hi || v.degree() <= 1) return r;

  const QPoly dv_poly = v.poly().derivative();
  const QPoly d2v_poly = dv_poly.derivative();
  auto dv = [&](double t) { return dv_poly.eval(t); };

  auto consider = [&](double t) {
    const double val = v(t);
    r.min = std::min(r.min, val);
    r.max = std::max(r.max, val);
  };

  constexpr int kScan = 4096;
  const double step = (hi - lo) / kScan;
  double a = lo;
  double fa = dv(a);
  for (int i = 1; i <= kScan; ++i) {
    const double b = i == kScan ? hi : lo + i * step;
    const double fb = dv(b);
    if (fa == 0.0) consider(a);
    if (fa * fb < 0.0) {
      double l = a;
      double h = b;
      double fl = fa;
      for (int it = 0; it < 60 && h - l > 0.0; ++it) {
        const double m = 0.5 * (l + h);
        const double fm = dv(m);
        if (fm == 0.0) {
          l = h = m;
          break;
        }
        if ((fm < 0.0) == (fl < 0.0)) {
          l = m;
          fl = fm;
        } else {
          h = m;
        }
      }
      double root = 0.5 * (l + h);
      for (int it = 0; it < 4; ++it) {
        const double d2 = d2v_poly.eval(root);
        if (d2 == 0.0) break;
        const double next = root - dv(root) / d2;
        if (next < a || next > b) break;
        root = next;
      }
      consider(root);
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) consider(hi);
  return r;
}

ConvergenceMargin convergence_margin(const Potential& v, double mu, double q, double x, double p) {
  if (p == 0.0) throw ZeroMomentum();
  const PotentialRange range = potential_range(v, std::min(x, q), std::max(x, q));
  const double vq = v(q);
  ConvergenceMargin out;
  out.max_deviation = std::max(std::abs(vq - range.min), std::abs(vq - range.max));
  out.ratio = mu * out.max_deviation / (p * p);
  out.converges = out.ratio < 0.5;
  return out;
}

double toa_tail_bound(const Potential& v, double mu, double q, double x, double p, int kmax) {
  const ConvergenceMargin margin = convergence_margin(v, mu, q, x, p);
  const double r = margin.ratio;
  if (r >= 0.5) return std::numeric_limits<double>::infinity();
  const double scale = mu * std::abs(q - x) / std::abs(p);
  if (r == 0.0) return 0.0;
  // c_{K+1} r^{K+1} in log space; c_k = (2k-1)!!/k! and c_{k+1}/c_k <= 2.
  const int k = kmax + 1;
  double log_c = 0.0;
  for (int i = 1; i <= k; ++i) log_c += std::log(2.0 * i - 1.0) - std::log(static_cast<double>(i));
  return scale * std::exp(log_c + k * std::log(r)) / (1.0 - 2.0 * r);
}

ToaQuadratureResult toa_quadrature(const Potential& v, const PhasePoint& pt, double tol) {
  if (pt.p == 0.0) throw ZeroMomentum();
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double energy = pt.p * pt.p / (2.0 * pt.mu) + v(pt.q);
  const PotentialRange range = potential_range(v, std::min(pt.x, pt.q), std::max(pt.x, pt.q));
  const double gap = energy - range.max;
  if (!(gap > 1e-12 * std::max(std::abs(energy), 1.0))) {
    throw NotAccessible("H - V(q') <= 0 between arrival point and q (min gap " + std::to_string(gap) + ")");
  }
  const double prefactor = -(pt.p > 0.0 ? 1.0 : -1.0) * std::sqrt(pt.mu / 2.0);
  QuadSpec spec;
  spec.abs_tol = tol / std::abs(prefactor);
  auto integrand = [&](double t) { return 1.0 / std::sqrt(energy - v(t)); };
  const auto r = integrate(integrand, pt.x, pt.q, spec);
  return {prefactor * r.value, std::abs(prefactor) * r.error};
}

}  // namespace supratoa
