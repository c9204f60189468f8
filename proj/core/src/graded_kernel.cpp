#include "supratoa/graded_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace supratoa {

GradedKernel::GradedKernel(Potential potential, Rational mu, int jmax, int mmax)
    : potential_(std::move(potential)), mu_(std::move(mu)), jmax_(jmax), mmax_(mmax) {
  if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
}

bool GradedKernel::valid_index(const Index& idx) {
  return idx.m >= 1 && idx.j >= 0 && idx.s >= 0 && idx.s <= std::max(idx.j - 1, 0);
}

void GradedKernel::add(int m, int j, int s, const Rational& c) {
  const Index idx{m, j, s};
  if (!valid_index(idx)) {
    throw std::logic_error("kernel index out of structure: m=" + std::to_string(m) + " j=" + std::to_string(j) +
                           " s=" + std::to_string(s));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void GradedKernel::set(int m, int j, int s, const Rational& c) {
  const Index idx{m, j, s};
  if (!valid_index(idx)) {
    throw std::logic_error("kernel index out of structure: m=" + std::to_string(m) + " j=" + std::to_string(j) +
                           " s=" + std::to_string(s));
  }
  if (c.is_zero()) {
    entries_.erase(idx);
  } else {
    entries_[idx] = c;
  }
}

Rational GradedKernel::get(int m, int j, int s) const {
  const auto it = entries_.find(Index{m, j, s});
  return it == entries_.end() ? Rational() : it->second;
}

GradedKernel GradedKernel::grade_slice(int s) const {
  GradedKernel out(potential_, mu_, jmax_, mmax_);
  for (const auto& [idx, c] : entries_) {
    if (idx.s == s) out.entries_.emplace(idx, c);
  }
  return out;
}

GradedKernel GradedKernel::grades_from(int min_grade) const {
  GradedKernel out(potential_, mu_, jmax_, mmax_);
  for (const auto& [idx, c] : entries_) {
    if (idx.s >= min_grade) out.entries_.emplace(idx, c);
  }
  return out;
}

GradedKernel GradedKernel::truncated(int jmax) const {
  GradedKernel out(potential_, mu_, std::min(jmax, jmax_), mmax_);
  for (const auto& [idx, c] : entries_) {
    if (idx.j <= jmax) out.entries_.emplace(idx, c);
  }
  return out;
}

double GradedKernel::eval_uv(double u, double v, double hbar) const {
  const double g = mu_.to_double() / (2.0 * hbar * hbar);
  double sum = 0.0;
  for (const auto& [idx, c] : entries_) {
    sum += c.to_double() * std::pow(g, idx.j - idx.s) * std::pow(u, idx.m) * std::pow(v, 2 * idx.j);
  }
  return sum;
}

GradedKernel operator-(const GradedKernel& a, const GradedKernel& b) {
  GradedKernel out = a;
  for (const auto& [idx, c] : b.entries()) out.add(idx.m, idx.j, idx.s, -c);
  return out;
}

}  // namespace supratoa
