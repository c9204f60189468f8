#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "supratoa/bump.hpp"
#include "supratoa/graded_kernel.hpp"
#include "supratoa/potential.hpp"
#include "supratoa/quadrature.hpp"

namespace supratoa {

/// <q|T|q'> = (mu / i hbar) factor(q, q') sgn(q - q').
struct EvaluableKernel {
  std::function<double(double, double)> factor;
  double mu = 1.0;
  double hbar = 1.0;

  [[nodiscard]] std::complex<double> operator()(double q, double qp) const;
};

/// Truncated series T(u, v) of a GradedKernel with the grades collapsed for
/// the given hbar; coefficients are converted to double once.
EvaluableKernel series_kernel(const GradedKernel& k, double hbar);

/// T0(q, q') = 1/2 int_0^{(q+q')/2} 0F1(1; (mu/2hbar^2)(q-q')^2 [V((q+q')/2) - V(q'')]) dq''.
/// Throws std::invalid_argument unless hbar > 0.
double kernel_integral_form(const Potential& v, double mu, double hbar, double q, double qp,
                            const QuadSpec& quad = {});

EvaluableKernel integral_kernel(const Potential& v, double mu, double hbar, const QuadSpec& quad = {});

/// Same kernel with the factor multiplied by c.
EvaluableKernel scaled(const EvaluableKernel& k, double c);

/// Compactly supported complex function on [lo, hi].
struct TestFunction {
  std::function<std::complex<double>(double)> f;
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] std::complex<double> operator()(double q) const { return f(q); }
};

/// Sum of bumps; support is the hull of the individual supports.
TestFunction as_test_function(const std::vector<BumpProfile>& bumps);
TestFunction as_test_function(const BumpProfile& bump);

/// H chi = -(hbar^2/2mu) chi'' + V chi with analytic bump derivatives.
TestFunction apply_hamiltonian(const Potential& v, double mu, double hbar, const std::vector<BumpProfile>& bumps);

/// (T chi)(q) = int <q|T|q'> chi(q') dq' over supp(chi), with q' = q as a
/// panel boundary.
QuadResult<std::complex<double>> apply_kernel_at(const EvaluableKernel& k, const TestFunction& chi, double q,
                                                  const QuadSpec& quad = {});

/// (T phi) sampled on qgrid. Throws QuadratureFailure on a non-finite value.
std::vector<std::complex<double>> apply_kernel(const EvaluableKernel& k, const BumpProfile& phi,
                                               const std::vector<double>& qgrid, const QuadSpec& quad = {});

/// <a|b> = int conj(a) b.
QuadResult<std::complex<double>> inner_product(const TestFunction& a, const TestFunction& b,
                                               const QuadSpec& quad = {});

/// <a|T b> by nested quadrature; the error includes the inner estimates.
QuadResult<std::complex<double>> matrix_element(const EvaluableKernel& k, const TestFunction& a,
                                                const TestFunction& b, const QuadSpec& quad = {});

struct CommutatorReport {
  double residual = 0.0;      ///< |<phi|[H,T]psi> - i hbar <phi|psi>| / (hbar |<phi|psi>|)
  double error_budget = 0.0;  ///< propagated quadrature error estimate on residual
  std::complex<double> commutator{};  ///< <phi|[H,T]psi>
  std::complex<double> overlap{};     ///< <phi|psi>
};

/// Canonical commutation check. H is moved onto phi through its symmetry on
/// compactly supported functions:
///   <phi|[H,T]psi> = <H phi|T psi> - <phi|T H psi>.
/// Throws ZeroOverlap when |<phi|psi>| < 1e-10 ||phi|| ||psi||.
CommutatorReport commutator_residual(const Potential& v, const EvaluableKernel& k,
                                     const std::vector<BumpProfile>& phi, const std::vector<BumpProfile>& psi,
                                     const QuadSpec& quad = {});
CommutatorReport commutator_residual(const Potential& v, const EvaluableKernel& k, const BumpProfile& phi,
                                     const BumpProfile& psi, const QuadSpec& quad = {});

}  // namespace supratoa
