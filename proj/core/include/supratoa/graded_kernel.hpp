#pragma once

#include <map>
#include <optional>

#include "supratoa/potential.hpp"
#include "supratoa/rational.hpp"

namespace supratoa {

/// Truncated time-kernel series in characteristic coordinates u = q + q',
/// v = q - q':
///
///   T(u, v) = sum A[m][j][s] * (mu / 2 hbar^2)^(j - s) * u^m * v^(2j)
///
/// The coefficients A carry the potential but neither mu nor hbar. Only even
/// powers of v are representable. Valid indices are m >= 1, j >= 0 and
/// 0 <= s <= max(j - 1, 0); writing anything else throws std::logic_error.
class GradedKernel {
 public:
  struct Index {
    int m = 0;
    int j = 0;
    int s = 0;
    friend bool operator==(const Index&, const Index&) = default;
    // Ordered by v-power first, then grade, then u-power.
    friend bool operator<(const Index& a, const Index& b) {
      if (a.j != b.j) return a.j < b.j;
      if (a.s != b.s) return a.s < b.s;
      return a.m < b.m;
    }
  };
  using Entries = std::map<Index, Rational>;

  GradedKernel() = default;
  GradedKernel(Potential potential, Rational mu, int jmax, int mmax);

  [[nodiscard]] static bool valid_index(const Index& idx);

  /// Accumulates c into A[m][j][s]; exact cancellation removes the entry.
  void add(int m, int j, int s, const Rational& c);
  void set(int m, int j, int s, const Rational& c);
  [[nodiscard]] Rational get(int m, int j, int s) const;

  [[nodiscard]] const Entries& entries() const { return entries_; }
  [[nodiscard]] const Potential& potential() const { return potential_; }
  [[nodiscard]] const Rational& mu() const { return mu_; }
  [[nodiscard]] int jmax() const { return jmax_; }
  [[nodiscard]] int mmax() const { return mmax_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  /// Restriction to a single hbar grade.
  [[nodiscard]] GradedKernel grade_slice(int s) const;
  [[nodiscard]] GradedKernel grades_from(int min_grade) const;
  /// Entries with j <= jmax only.
  [[nodiscard]] GradedKernel truncated(int jmax) const;

  /// Real factor T(u, v) evaluated in double precision.
  [[nodiscard]] double eval_uv(double u, double v, double hbar) const;

  /// Entry-wise equality of the coefficient tables (header ignored).
  [[nodiscard]] bool same_coefficients(const GradedKernel& other) const { return entries_ == other.entries_; }

  friend bool operator==(const GradedKernel&, const GradedKernel&) = default;

 private:
  Potential potential_;
  Rational mu_{1};
  int jmax_ = 0;
  int mmax_ = 1;
  Entries entries_;
};

GradedKernel operator-(const GradedKernel& a, const GradedKernel& b);

}  // namespace supratoa
