#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supratoa {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Serializes to "num/den" (or a bare integer when den == 1) and parses the
/// same two forms. Division by zero throws DivisionByZero.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);

  static Rational parse(std::string_view text);
  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);
  /// (2k-1)!! with the convention (-1)!! = 1.
  static Rational odd_double_factorial(unsigned k);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational pow(int exponent) const;
  [[nodiscard]] std::string numerator_str() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_str() const { return value_.get_den().get_str(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace supratoa
