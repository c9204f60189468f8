#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supratoa/graded_kernel.hpp"
#include "supratoa/potential.hpp"

namespace supratoa {

struct KernelRequest {
  Potential potential;
  Rational mu{1};
  int jmax = 0;
  /// Largest u-power kept; defaults to max(D, 2) * jmax + 1, which covers
  /// every entry the recurrence can reach for a degree-D potential.
  std::optional<int> mmax;

  [[nodiscard]] int effective_mmax() const;
};

/// Fills A[m][j][s] from the hbar-graded coefficient recurrence
///
///   A[m][j][s] = 1/(2 m j) sum_{r=0}^{s} sum_{l} a_l / 2^(l-1) C(l, 2r+1)
///                A[m-l+2r][j-r-1][s-r]
///
/// seeded by A[m][0][0] = delta_{m,1} / 4.
GradedKernel solve_kernel_general(const KernelRequest& req);

/// Closed-form harmonic kernel, V = mu omega^2 q^2 / 2:
///   A[2k+1][k][0] = (mu omega^2 / 2)^k / (4 (2k+1)!).
GradedKernel solve_kernel_harmonic(const Rational& mu, const Rational& omega, int jmax);

/// Unit-stripped anharmonic coefficients b[k][j] for V = lambda q^4, where the
/// (u^(4j+1-6k) v^(2j)) coefficient is  b[k][j] (mu lambda / 4 hbar^2)^(j-k) / 4.
/// Keys are (k, j) with j >= 2k; b[0][0] = 1.
std::map<std::pair<int, int>, Rational> anharmonic_beta_table(int jmax);

/// Anharmonic kernel assembled from the beta recurrence; the u-power is
/// 4j+1-6k and the hbar grade is s = k.
GradedKernel solve_kernel_anharmonic(const Rational& lambda, const Rational& mu, int jmax);

/// sigma[k][j] of the linear-system recurrence, sigma[0][0] = 1, 0 <= j <= k.
std::map<std::pair<int, int>, Rational> linear_sigma_table(int kmax);

/// Linear-system kernel for V = a q + b q^2 / 2; only grade s = 0 is populated.
GradedKernel solve_kernel_linear(const Rational& a, const Rational& b, const Rational& mu, int kmax);

/// C[m][j] table of the classical (s = 0) coefficients with
///   A[m][j][0] = C[m][j] / (j! 2^(m+1) m),  C[m][0] = delta_{m,1},
///   C[m][j] = sum_{s=1}^{m-j} s a_s / (m - s) C[m-s][j-1].
struct ClassicalTerm {
  std::map<std::pair<int, int>, Rational> c;  ///< keyed (m, j); nonzero only
  int jmax = 0;

  [[nodiscard]] Rational c_at(int m, int j) const;
  [[nodiscard]] Rational alpha0(int m, int j) const;
};

ClassicalTerm classical_term(const Potential& v, const Rational& mu, int jmax);

/// The classical term as a GradedKernel (grade 0 only).
GradedKernel classical_kernel(const Potential& v, const Rational& mu, int jmax);

/// <q|T|q'> = (mu / i hbar) T(q + q', q - q') sgn(q - q'), with sgn(0) = 0.
std::complex<double> kernel_eval(const GradedKernel& k, double q, double qp, double hbar);

/// Substitution of the truncated kernel into
///   -2 (hbar^2/mu) T_uv + [V((u+v)/2) - V((u-v)/2)] T,
/// carried out exactly with hbar kept symbolic.
struct PdeResidual {
  std::optional<int> lowest_total_degree;  ///< lowest u+v degree with nonzero coefficient
  std::optional<int> lowest_v_degree;      ///< lowest v degree with nonzero coefficient
  std::size_t nonzero_terms = 0;
  [[nodiscard]] bool exact() const { return nonzero_terms == 0; }
};

PdeResidual pde_residual(const GradedKernel& k, const Potential& v);

struct BoundaryReport {
  bool u_slice = true;        ///< T(u, 0) = u / 4
  bool no_m0 = true;          ///< T(0, v) = 0, i.e. no m = 0 coefficients
  bool derivative_sum = true; ///< dT(q,q)/dq + dT/dq|_{q=q'} + dT/dq'|_{q'=q} = 1
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return u_slice && no_m0 && derivative_sum; }
};

BoundaryReport boundary_check(const GradedKernel& k);

/// Ungraded coefficients alpha[m][n] of T(u,v) = sum alpha u^m v^n for a
/// fixed numeric value g = mu / 2 hbar^2, computed for every n (odd included)
/// from the raw recurrence. Only nonzero coefficients are stored, keyed (m, n).
struct UngradedKernel {
  std::map<std::pair<int, int>, Rational> alpha;
  int nmax = 0;
  int mmax = 0;
  [[nodiscard]] Rational at(int m, int n) const;
  [[nodiscard]] bool odd_powers_vanish() const;
};

UngradedKernel solve_kernel_ungraded(const Potential& v, const Rational& g, int nmax, int mmax);

}  // namespace supratoa
