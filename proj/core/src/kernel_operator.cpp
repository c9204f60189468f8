#include "supratoa/kernel_operator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "supratoa/errors.hpp"
#include "supratoa/hypergeometric.hpp"

namespace supratoa {

using cplx = std::complex<double>;

cplx EvaluableKernel::operator()(double q, double qp) const {
  const double diff = q - qp;
  if (diff == 0.0) return {0.0, 0.0};
  const double f = factor(q, qp) * (diff > 0.0 ? 1.0 : -1.0);
  return {0.0, -mu / hbar * f};
}

EvaluableKernel series_kernel(const GradedKernel& k, double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  const double g = k.mu().to_double() / (2.0 * hbar * hbar);
  // rows[j][m] = sum_s A[m][j][s] g^(j-s)
  auto rows = std::make_shared<std::vector<std::vector<double>>>();
  for (const auto& [idx, a] : k.entries()) {
    if (static_cast<int>(rows->size()) <= idx.j) rows->resize(idx.j + 1);
    auto& row = (*rows)[idx.j];
    if (static_cast<int>(row.size()) <= idx.m) row.resize(idx.m + 1, 0.0);
    row[idx.m] += a.to_double() * std::pow(g, idx.j - idx.s);
  }
  auto factor = [rows](double q, double qp) {
    const double u = q + qp;
    const double v2 = (q - qp) * (q - qp);
    double total = 0.0;
    for (auto j = rows->size(); j-- > 0;) {
      const auto& row = (*rows)[j];
      double poly = 0.0;
      for (auto m = row.size(); m-- > 0;) poly = poly * u + row[m];
      total = total * v2 + poly;
    }
    return total;
  };
  return {factor, k.mu().to_double(), hbar};
}

double kernel_integral_form(const Potential& v, double mu, double hbar, double q, double qp, const QuadSpec& quad) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  const double half_u = 0.5 * (q + qp);
  if (half_u == 0.0) return 0.0;
  const double scale = mu / (2.0 * hbar * hbar) * (q - qp) * (q - qp);
  const double v_mid = v(half_u);
  auto integrand = [&](double t) { return hyper0f1(scale * (v_mid - v(t))); };
  QuadSpec spec = quad;
  spec.abs_tol = 2.0 * quad.abs_tol;
  return 0.5 * integrate(integrand, 0.0, half_u, spec).value;
}

EvaluableKernel integral_kernel(const Potential& v, double mu, double hbar, const QuadSpec& quad) {
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  auto factor = [v, mu, hbar, quad](double q, double qp) { return kernel_integral_form(v, mu, hbar, q, qp, quad); };
  return {factor, mu, hbar};
}

EvaluableKernel scaled(const EvaluableKernel& k, double c) {
  auto inner = k.factor;
  return {[inner, c](double q, double qp) { return c * inner(q, qp); }, k.mu, k.hbar};
}

TestFunction as_test_function(const std::vector<BumpProfile>& bumps) {
  if (bumps.empty()) throw std::invalid_argument("test function needs at least one bump");
  double lo = bumps.front().lo();
  double hi = bumps.front().hi();
  for (const auto& b : bumps) {
    lo = std::min(lo, b.lo());
    hi = std::max(hi, b.hi());
  }
  return {[bumps](double q) {
            cplx s{};
            for (const auto& b : bumps) s += b.value(q);
            return s;
          },
          lo, hi};
}

TestFunction as_test_function(const BumpProfile& bump) { return as_test_function(std::vector<BumpProfile>{bump}); }

TestFunction apply_hamiltonian(const Potential& v, double mu, double hbar, const std::vector<BumpProfile>& bumps) {
  TestFunction base = as_test_function(bumps);
  const double kinetic = -hbar * hbar / (2.0 * mu);
  base.f = [bumps, v, kinetic](double q) {
    cplx s{};
    for (const auto& b : bumps) s += kinetic * b.second_derivative(q) + v(q) * b.value(q);
    return s;
  };
  return base;
}

QuadResult<cplx> apply_kernel_at(const EvaluableKernel& k, const TestFunction& chi, double q, const QuadSpec& quad) {
  std::vector<double> breaks{chi.lo};
  if (q > chi.lo && q < chi.hi) breaks.push_back(q);
  breaks.push_back(chi.hi);
  auto integrand = [&](double qp) { return k(q, qp) * chi(qp); };
  return integrate_pieces(integrand, breaks, quad);
}

std::vector<cplx> apply_kernel(const EvaluableKernel& k, const BumpProfile& phi, const std::vector<double>& qgrid,
                               const QuadSpec& quad) {
  const TestFunction chi = as_test_function(phi);
  std::vector<cplx> out;
  out.reserve(qgrid.size());
  for (double q : qgrid) {
    const cplx val = apply_kernel_at(k, chi, q, quad).value;
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
      throw QuadratureFailure("kernel application is not finite at q = " + std::to_string(q));
    }
    out.push_back(val);
  }
  return out;
}

namespace {

std::vector<double> merged_breaks(const TestFunction& a, const TestFunction& b) {
  std::vector<double> br{a.lo, a.hi};
  for (double x : {b.lo, b.hi}) {
    if (x > a.lo && x < a.hi) br.push_back(x);
  }
  std::sort(br.begin(), br.end());
  return br;
}

}  // namespace

QuadResult<cplx> inner_product(const TestFunction& a, const TestFunction& b, const QuadSpec& quad) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return {};
  auto integrand = [&](double q) { return std::conj(a(q)) * b(q); };
  return integrate(integrand, lo, hi, quad);
}

QuadResult<cplx> matrix_element(const EvaluableKernel& k, const TestFunction& a, const TestFunction& b,
                                const QuadSpec& quad) {
  QuadSpec inner = quad;
  inner.abs_tol = 0.1 * quad.abs_tol;
  double worst_inner = 0.0;
  auto integrand = [&](double q) {
    const cplx av = a(q);
    if (av == cplx{}) return cplx{};
    const auto tb = apply_kernel_at(k, b, q, inner);
    worst_inner = std::max(worst_inner, tb.error);
    return std::conj(av) * tb.value;
  };
  auto r = integrate_pieces(integrand, merged_breaks(a, b), quad);
  auto abs_a = [&](double q) { return std::abs(a(q)); };
  const double mass = integrate(abs_a, a.lo, a.hi, quad).value;
  r.error += worst_inner * mass;
  return r;
}

CommutatorReport commutator_residual(const Potential& v, const EvaluableKernel& k,
                                     const std::vector<BumpProfile>& phi, const std::vector<BumpProfile>& psi,
                                     const QuadSpec& quad) {
  const TestFunction f = as_test_function(phi);
  const TestFunction g = as_test_function(psi);
  const auto overlap = inner_product(f, g, quad);
  const double norm_f = std::sqrt(std::abs(inner_product(f, f, quad).value));
  const double norm_g = std::sqrt(std::abs(inner_product(g, g, quad).value));
  if (std::abs(overlap.value) < 1e-10 * norm_f * norm_g) {
    throw ZeroOverlap("test functions have negligible overlap |<phi|psi>| = " +
                      std::to_string(std::abs(overlap.value)));
  }
  const TestFunction hf = apply_hamiltonian(v, k.mu, k.hbar, phi);
  const TestFunction hg = apply_hamiltonian(v, k.mu, k.hbar, psi);
  const auto ht = matrix_element(k, hf, g, quad);
  const auto th = matrix_element(k, f, hg, quad);

  CommutatorReport rep;
  rep.commutator = ht.value - th.value;
  rep.overlap = overlap.value;
  const cplx target{0.0, k.hbar};
  const double denom = k.hbar * std::abs(overlap.value);
  rep.residual = std::abs(rep.commutator - target * overlap.value) / denom;
  rep.error_budget = (ht.error + th.error + k.hbar * overlap.error) / denom +
                     (rep.residual + 1.0) * overlap.error / std::abs(overlap.value);
  return rep;
}

CommutatorReport commutator_residual(const Potential& v, const EvaluableKernel& k, const BumpProfile& phi,
                                     const BumpProfile& psi, const QuadSpec& quad) {
  return commutator_residual(v, k, std::vector<BumpProfile>{phi}, std::vector<BumpProfile>{psi}, quad);
}

}  // namespace supratoa
