#pragma once

#include "supratoa/graded_kernel.hpp"
#include "supratoa/momentum_series.hpp"

namespace supratoa {

/// Weyl-Wigner transform of the kernel (mu / i hbar) T(u, v) sgn(v), term by
/// term. Through the identity
///   int s^(m-1) sgn(s) e^(-i x s) ds = 2 (m-1)! / (i^m x^m)
/// each entry A[m][j][s] becomes
///   -2 mu (2q)^m A (2j)! (-1)^j (mu/2)^(j-s) hbar^(2s) p^-(2j+1),
/// stored at (k = j, s).
MomentumSeries wigner_transform(const GradedKernel& k);

/// hbar -> 0 limit: the s = 0 slice.
MomentumSeries classical_limit(const MomentumSeries& t);

/// Everything beyond the classical limit: the s >= 1 slices.
MomentumSeries hbar2_residual(const MomentumSeries& t);

/// Inverse of wigner_transform on classical observables. A term c q^a p^-(2k+1)
/// maps to A[a][k][0] = -c (-1)^k 2^k / (2^(a+1) mu^(k+1) (2k)!).
/// Throws GradeError if any term has s >= 1, and std::domain_error for a
/// q^0 term (the kernel vanishes at u = 0, so it has no preimage).
GradedKernel weyl_quantize(const MomentumSeries& t, const Rational& mu, const Potential& v = Potential::free());

}  // namespace supratoa
