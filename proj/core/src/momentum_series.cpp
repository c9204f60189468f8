#include "supratoa/momentum_series.hpp"

#include <cmath>

namespace supratoa {

void MomentumSeries::add(int k, int s, const QPoly& poly) {
  if (poly.is_zero()) return;
  const Index idx{k, s};
  auto [it, inserted] = terms_.try_emplace(idx, poly);
  if (!inserted) {
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly MomentumSeries::term(int k, int s) const {
  const auto it = terms_.find(Index{k, s});
  return it == terms_.end() ? QPoly() : it->second;
}

int MomentumSeries::max_grade() const {
  int g = -1;
  for (const auto& [idx, _] : terms_) g = std::max(g, idx.s);
  return g;
}

MomentumSeries MomentumSeries::grade_slice(int s) const {
  MomentumSeries out;
  for (const auto& [idx, poly] : terms_) {
    if (idx.s == s) out.terms_.emplace(idx, poly);
  }
  return out;
}

MomentumSeries MomentumSeries::grades_from(int min_grade) const {
  MomentumSeries out;
  for (const auto& [idx, poly] : terms_) {
    if (idx.s >= min_grade) out.terms_.emplace(idx, poly);
  }
  return out;
}

MomentumSeries MomentumSeries::truncated(int kmax) const {
  MomentumSeries out;
  for (const auto& [idx, poly] : terms_) {
    if (idx.k <= kmax) out.terms_.emplace(idx, poly);
  }
  return out;
}

MomentumSeries MomentumSeries::shifted(const Rational& x) const {
  MomentumSeries out;
  for (const auto& [idx, poly] : terms_) out.add(idx.k, idx.s, poly_shift(poly, x));
  return out;
}

double MomentumSeries::eval(double q, double p, double hbar) const {
  double sum = 0.0;
  for (const auto& [idx, poly] : terms_) {
    sum += poly.eval(q) * std::pow(p, -(2 * idx.k + 1)) * std::pow(hbar, 2 * idx.s);
  }
  return sum;
}

MomentumSeries& MomentumSeries::operator+=(const MomentumSeries& rhs) {
  for (const auto& [idx, poly] : rhs.terms_) add(idx.k, idx.s, poly);
  return *this;
}

MomentumSeries& MomentumSeries::operator-=(const MomentumSeries& rhs) {
  for (const auto& [idx, poly] : rhs.terms_) add(idx.k, idx.s, -poly);
  return *this;
}

}  // namespace supratoa
