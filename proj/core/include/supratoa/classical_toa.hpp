#pragma once

#include "supratoa/momentum_series.hpp"
#include "supratoa/potential.hpp"
#include "supratoa/quadrature.hpp"

namespace supratoa {

/// Phase-space point together with the arrival point and mass.
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
  double x = 0.0;
  double mu = 1.0;
};

/// P_k(q) with T_k(q, p; x) = P_k(q) p^-(2k+1), from the closed form
///   P_k = -((2k-1)!!/k!) mu^(k+1) int_x^q (V(q) - V(q'))^k dq'.
QPoly toa_iterate_closed(const Potential& v, const Rational& mu, int k, const Rational& x);

/// Same P_k, generated by iterating the inverse kinetic Liouvillian
///   T_k = -(mu/p) int_x^q V'(q') dT_{k-1}/dp dq'
/// from the seed T_0 = -mu (q - x)/p.
QPoly toa_iterate_liouville(const Potential& v, const Rational& mu, int k, const Rational& x);

/// Partial sum sum_{k<=K} (-1)^k T_k as a MomentumSeries at grade s = 0.
MomentumSeries local_toa(const Potential& v, const Rational& mu, const Rational& x, int kmax);

struct ToaQuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Global time of arrival -sgn(p) sqrt(mu/2) int_x^q dq' / sqrt(H - V(q'))
/// by adaptive quadrature. Throws ZeroMomentum, NotAccessible or
/// QuadratureFailure.
ToaQuadratureResult toa_quadrature(const Potential& v, const PhasePoint& pt, double tol);

struct ConvergenceMargin {
  double max_deviation = 0.0;  ///< M_q = max |V(q) - V(q')| over q' between x and q
  double ratio = 0.0;          ///< mu M_q / p^2
  bool converges = false;      ///< ratio < 1/2
};

/// Convergence criterion of the local time-of-arrival series. Throws ZeroMomentum.
ConvergenceMargin convergence_margin(const Potential& v, double mu, double q, double x, double p);

/// Upper bound on |sum_{k>K} (-1)^k T_k(q, p; x)|, from the geometric majorant
/// c_k r^k (mu |q - x| / |p|) with c_k = (2k-1)!!/k! and r = mu M_q / p^2.
/// Infinite when r >= 1/2.
double toa_tail_bound(const Potential& v, double mu, double q, double x, double p, int kmax);

/// Max and min of V over [lo, hi], located via sign changes of V' on a
/// 4096-point scan plus Newton polishing.
struct PotentialRange {
  double min = 0.0;
  double max = 0.0;
};
PotentialRange potential_range(const Potential& v, double lo, double hi);

}  // namespace supratoa
