#include "supratoa/kernel_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace supratoa {

namespace {

// Weights a_l / 2^(l-1) * C(l, 2r+1) of the u^(l-2r-1) v^(2r+1) term of
// V((u+v)/2) - V((u-v)/2), keyed by (l, r). Constant terms drop out.
std::vector<std::tuple<int, int, Rational>> odd_split_weights(const Potential& v) {
  std::vector<std::tuple<int, int, Rational>> w;
  for (const auto& [l, a] : v.poly().terms()) {
    if (l < 1) continue;
    const Rational base = a / Rational(2).pow(l - 1);
    for (int r = 0; 2 * r + 1 <= l; ++r) {
      w.emplace_back(l, r, base * Rational::binomial(static_cast<unsigned>(l), static_cast<unsigned>(2 * r + 1)));
    }
  }
  return w;
}

}  // namespace

int KernelRequest::effective_mmax() const {
  if (mmax) return *mmax;
  return std::max(potential.degree(), 2) * jmax + 1;
}

GradedKernel solve_kernel_general(const KernelRequest& req) {
  if (req.jmax < 0) throw std::invalid_argument("jmax must be >= 0");
  const int mmax = req.effective_mmax();
  if (mmax < 2 * req.jmax + 1) throw std::invalid_argument("mmax must be >= 2*jmax + 1");

  GradedKernel k(req.potential, req.mu, req.jmax, mmax);
  k.set(1, 0, 0, Rational(1, 4));
  const auto weights = odd_split_weights(req.potential);

  for (int j = 1; j <= req.jmax; ++j) {
    for (int s = 0; s <= j - 1; ++s) {
      for (int m = 1; m <= mmax; ++m) {
        Rational acc;
        for (const auto& [l, r, w] : weights) {
          if (r > s || j - r - 1 < 0) continue;
          const int src_m = m - l + 2 * r;
          if (src_m < 1) continue;
          const Rational src = k.get(src_m, j - r - 1, s - r);
          if (!src.is_zero()) acc += w * src;
        }
        if (!acc.is_zero()) k.set(m, j, s, acc / Rational(2L * m * j));
      }
    }
  }
  return k;
}

GradedKernel solve_kernel_harmonic(const Rational& mu, const Rational& omega, int jmax) {
  if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
  const Potential v = Potential::harmonic(mu, omega);
  const Rational a2 = mu * omega * omega / Rational(2);
  GradedKernel k(v, mu, jmax, 2 * jmax + 1);
  for (int n = 0; n <= jmax; ++n) {
    k.set(2 * n + 1, n, 0, a2.pow(n) / (Rational(4) * Rational::factorial(static_cast<unsigned>(2 * n + 1))));
  }
  return k;
}

std::map<std::pair<int, int>, Rational> anharmonic_beta_table(int jmax) {
  std::map<std::pair<int, int>, Rational> b;
  b[{0, 0}] = Rational(1);
  auto at = [&](int k, int j) {
    if (k < 0 || j < 0 || j < 2 * k) return Rational();
    const auto it = b.find({k, j});
    return it == b.end() ? Rational() : it->second;
  };
  for (int j = 1; j <= jmax; ++j) {
    for (int k = 0; 2 * k <= j; ++k) {
      const Rational num = at(k, j - 1) + at(k - 1, j - 2);
      if (num.is_zero()) continue;
      b[{k, j}] = num / Rational(static_cast<long>(4 * j + 1 - 6 * k) * 2 * j);
    }
  }
  return b;
}

GradedKernel solve_kernel_anharmonic(const Rational& lambda, const Rational& mu, int jmax) {
  if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
  GradedKernel k(Potential::quartic(lambda), mu, jmax, 4 * jmax + 1);
  const Rational half_lambda = lambda / Rational(2);
  for (const auto& [kj, beta] : anharmonic_beta_table(jmax)) {
    const auto [kk, j] = kj;
    // (mu lambda / 4 hbar^2)^(j-k) = (lambda/2)^(j-k) (mu / 2 hbar^2)^(j-k)
    k.add(4 * j + 1 - 6 * kk, j, kk, beta * half_lambda.pow(j - kk) / Rational(4));
  }
  return k;
}

std::map<std::pair<int, int>, Rational> linear_sigma_table(int kmax) {
  std::map<std::pair<int, int>, Rational> sigma;
  sigma[{0, 0}] = Rational(1);
  auto at = [&](int k, int j) {
    if (j < 0 || j > k) return Rational();
    const auto it = sigma.find({k, j});
    return it == sigma.end() ? Rational() : it->second;
  };
  for (int k = 1; k <= kmax; ++k) {
    for (int j = 0; j <= k; ++j) {
      const Rational v = (at(k - 1, j - 1) + at(k - 1, j) / Rational(2)) / Rational(2 * k + 1 - j);
      if (!v.is_zero()) sigma[{k, j}] = v;
    }
  }
  return sigma;
}

GradedKernel solve_kernel_linear(const Rational& a, const Rational& b, const Rational& mu, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  GradedKernel k(Potential::linear(a, b), mu, kmax, 2 * kmax + 1);
  for (const auto& [kj, sigma] : linear_sigma_table(kmax)) {
    const auto [kk, j] = kj;
    const Rational denom = Rational(4) * Rational(2).pow(kk) * Rational::factorial(static_cast<unsigned>(kk));
    k.add(2 * kk + 1 - j, kk, 0, sigma * b.pow(kk - j) * a.pow(j) / denom);
  }
  return k;
}

Rational ClassicalTerm::c_at(int m, int j) const {
  const auto it = c.find({m, j});
  return it == c.end() ? Rational() : it->second;
}

Rational ClassicalTerm::alpha0(int m, int j) const {
  const Rational cm = c_at(m, j);
  if (cm.is_zero()) return cm;
  return cm / (Rational::factorial(static_cast<unsigned>(j)) * Rational(2).pow(m + 1) * Rational(m));
}

ClassicalTerm classical_term(const Potential& v, const Rational& /*mu*/, int jmax) {
  if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
  ClassicalTerm out;
  out.jmax = jmax;
  out.c[{1, 0}] = Rational(1);
  const int degree = std::max(v.degree(), 1);
  for (int j = 1; j <= jmax; ++j) {
    const int mmax = degree * j + 1;
    for (int m = j + 1; m <= mmax; ++m) {
      Rational acc;
      for (const auto& [s, a] : v.poly().terms()) {
        if (s < 1 || s > m - j) continue;
        const Rational prev = out.c_at(m - s, j - 1);
        if (!prev.is_zero()) acc += Rational(s) * a / Rational(m - s) * prev;
      }
      if (!acc.is_zero()) out.c[{m, j}] = acc;
    }
  }
  return out;
}

GradedKernel classical_kernel(const Potential& v, const Rational& mu, int jmax) {
  const ClassicalTerm ct = classical_term(v, mu, jmax);
  GradedKernel k(v, mu, jmax, std::max(v.degree(), 2) * jmax + 1);
  for (const auto& [mj, _] : ct.c) k.set(mj.first, mj.second, 0, ct.alpha0(mj.first, mj.second));
  return k;
}

std::complex<double> kernel_eval(const GradedKernel& k, double q, double qp, double hbar) {
  const double diff = q - qp;
  if (diff == 0.0) return {0.0, 0.0};
  const double sgn = diff > 0.0 ? 1.0 : -1.0;
  const double t = k.eval_uv(q + qp, diff, hbar);
  // (mu / i hbar) = -i mu / hbar
  return {0.0, -k.mu().to_double() / hbar * t * sgn};
}

PdeResidual pde_residual(const GradedKernel& k, const Potential& v) {
  // Multiplying the PDE by g = mu / 2 hbar^2 gives  -T_uv + g W T  with
  // W = V((u+v)/2) - V((u-v)/2); g stays a formal symbol. Keys: (u, v, g).
  std::map<std::tuple<int, int, int>, Rational> res;
  auto add = [&](int du, int dv, int dg, const Rational& c) {
    auto [it, inserted] = res.try_emplace({du, dv, dg}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) res.erase(it);
    }
  };
  const auto weights = odd_split_weights(v);
  for (const auto& [idx, a] : k.entries()) {
    if (idx.j >= 1) add(idx.m - 1, 2 * idx.j - 1, idx.j - idx.s, -a * Rational(2L * idx.m * idx.j));
    for (const auto& [l, r, w] : weights) {
      add(idx.m + l - 2 * r - 1, 2 * idx.j + 2 * r + 1, idx.j - idx.s + 1, a * w);
    }
  }
  PdeResidual out;
  out.nonzero_terms = res.size();
  for (const auto& [key, _] : res) {
    const auto [du, dv, dg] = key;
    const int total = du + dv;
    if (!out.lowest_total_degree || total < *out.lowest_total_degree) out.lowest_total_degree = total;
    if (!out.lowest_v_degree || dv < *out.lowest_v_degree) out.lowest_v_degree = dv;
  }
  return out;
}

BoundaryReport boundary_check(const GradedKernel& k) {
  BoundaryReport rep;
  // (i) T(u, 0) = u / 4
  QPoly u_slice;
  for (const auto& [idx, a] : k.entries()) {
    if (idx.j == 0) u_slice += QPoly::monomial(idx.m, a);
  }
  if (u_slice != QPoly::monomial(1, Rational(1, 4))) {
    rep.u_slice = false;
    rep.failures.push_back("(i) T(u,0) = u/4 violated: T(u,0) = " + u_slice.str());
  }
  // (ii) T(0, v) = 0
  for (const auto& [idx, a] : k.entries()) {
    if (idx.m == 0) {
      rep.no_m0 = false;
      rep.failures.push_back("(ii) T(0,v) = 0 violated: m = 0 coefficient at j = " + std::to_string(idx.j));
      break;
    }
  }
  // (iii) With T = sum c_{m,n} (q+q')^m (q-q')^n, the derivative sum on the
  // diagonal is sum_m 2^(m+1) m c_{m,0} q^(m-1); the odd-n pieces of the two
  // partials cancel pairwise and odd v-powers are not representable anyway.
  QPoly sum;
  for (const auto& [idx, a] : k.entries()) {
    if (idx.j == 0) sum += QPoly::monomial(idx.m - 1, a * Rational(2).pow(idx.m + 1) * Rational(idx.m));
  }
  if (sum != QPoly(Rational(1))) {
    rep.derivative_sum = false;
    rep.failures.push_back("(iii) derivative-sum condition violated: sum = " + sum.str());
  }
  return rep;
}

Rational UngradedKernel::at(int m, int n) const {
  const auto it = alpha.find({m, n});
  return it == alpha.end() ? Rational() : it->second;
}

bool UngradedKernel::odd_powers_vanish() const {
  return std::none_of(alpha.begin(), alpha.end(), [](const auto& kv) { return kv.first.second % 2 != 0; });
}

UngradedKernel solve_kernel_ungraded(const Potential& v, const Rational& g, int nmax, int mmax) {
  UngradedKernel out;
  out.nmax = nmax;
  out.mmax = mmax;
  out.alpha[{1, 0}] = Rational(1, 4);
  const auto weights = odd_split_weights(v);
  for (int n = 1; n <= nmax; ++n) {
    for (int m = 1; m <= mmax; ++m) {
      Rational acc;
      for (const auto& [l, r, w] : weights) {
        const int src_m = m - l + 2 * r;
        const int src_n = n - 2 * r - 2;
        if (src_m < 1 || src_n < 0) continue;
        const Rational src = out.at(src_m, src_n);
        if (!src.is_zero()) acc += w * src;
      }
      if (!acc.is_zero()) out.alpha[{m, n}] = g * acc / Rational(static_cast<long>(m) * n);
    }
  }
  return out;
}

}  // namespace supratoa
