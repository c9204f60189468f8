#pragma once

#include <map>
#include <utility>

#include "supratoa/qpoly.hpp"

namespace supratoa {

/// Phase-space series  sum_{k,s} P_{k,s}(q) * p^-(2k+1) * hbar^(2s).
///
/// Keys are (k, s) with k the p-index and s the hbar^2 grade; stored
/// polynomials are never zero. The classical part is the s = 0 slice.
class MomentumSeries {
 public:
  struct Index {
    int k = 0;
    int s = 0;
    friend auto operator<=>(const Index&, const Index&) = default;
  };
  using Terms = std::map<Index, QPoly>;

  MomentumSeries() = default;

  /// Accumulates into (k, s); a cancellation to zero removes the entry.
  void add(int k, int s, const QPoly& poly);
  [[nodiscard]] QPoly term(int k, int s = 0) const;
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] int max_grade() const;

  [[nodiscard]] MomentumSeries grade_slice(int s) const;
  /// Terms with s >= min_grade.
  [[nodiscard]] MomentumSeries grades_from(int min_grade) const;
  [[nodiscard]] MomentumSeries truncated(int kmax) const;
  /// Every polynomial mapped through P -> P(t + x).
  [[nodiscard]] MomentumSeries shifted(const Rational& x) const;

  /// Numeric value of the (finite) series at (q, p) for the given hbar.
  [[nodiscard]] double eval(double q, double p, double hbar = 0.0) const;

  MomentumSeries& operator+=(const MomentumSeries& rhs);
  MomentumSeries& operator-=(const MomentumSeries& rhs);
  friend MomentumSeries operator-(MomentumSeries a, const MomentumSeries& b) { return a -= b; }
  friend bool operator==(const MomentumSeries&, const MomentumSeries&) = default;

 private:
  Terms terms_;
};

}  // namespace supratoa
