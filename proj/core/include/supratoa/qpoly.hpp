#pragma once

#include <map>
#include <string>

#include "supratoa/rational.hpp"

namespace supratoa {

/// Univariate polynomial in q with exact rational coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class QPoly {
 public:
  using Terms = std::map<int, Rational>;

  QPoly() = default;
  QPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(Terms terms);

  static QPoly monomial(int degree, Rational coeff = Rational(1));
  static QPoly variable() { return monomial(1); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Highest stored degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  [[nodiscard]] Rational coeff(int degree) const;

  [[nodiscard]] Rational operator()(const Rational& q) const;
  [[nodiscard]] double eval(double q) const;

  [[nodiscard]] QPoly derivative() const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] QPoly antiderivative() const;
  [[nodiscard]] QPoly pow(unsigned exponent) const;
  /// Q(t) = P(t + shift).
  [[nodiscard]] QPoly shifted(const Rational& shift) const;
  /// Q(t) = P(scale * t).
  [[nodiscard]] QPoly scaled(const Rational& scale) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& b) { return a *= b; }
  friend QPoly operator*(const Rational& a, QPoly b) { return b *= a; }
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human-readable form, e.g. "1/2*q^2 - q + 3".
  [[nodiscard]] std::string str() const;

 private:
  void add_term(int degree, const Rational& c);
  Terms terms_;
};

/// Q(t) = P(t + x), computed by binomial expansion.
QPoly poly_shift(const QPoly& p, const Rational& x);
QPoly poly_antideriv(const QPoly& p);
/// Exact definite integral of P over [lo, hi].
Rational poly_defint(const QPoly& p, const Rational& lo, const Rational& hi);

}  // namespace supratoa
