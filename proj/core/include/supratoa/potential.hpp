#pragma once

#include <string>

#include "supratoa/qpoly.hpp"

namespace supratoa {

/// Polynomial potential V(q) = sum_s a_s q^s with rational coefficients.
/// Degree <= 2 is a linear system, anything higher is nonlinear.
class Potential {
 public:
  Potential() = default;
  explicit Potential(QPoly poly) : poly_(std::move(poly)) {}

  static Potential free() { return Potential(); }
  /// V = a q + b q^2 / 2
  static Potential linear(const Rational& a, const Rational& b);
  /// V = mu omega^2 q^2 / 2
  static Potential harmonic(const Rational& mu, const Rational& omega);
  /// V = lambda q^4
  static Potential quartic(const Rational& lambda);

  [[nodiscard]] const QPoly& poly() const { return poly_; }
  [[nodiscard]] Rational coeff(int s) const { return poly_.coeff(s); }
  /// Degree D >= 0; the zero potential has degree 0.
  [[nodiscard]] int degree() const { return poly_.degree() < 0 ? 0 : poly_.degree(); }
  [[nodiscard]] bool is_linear() const { return degree() <= 2; }
  [[nodiscard]] bool is_free() const;
  [[nodiscard]] double operator()(double q) const { return poly_.eval(q); }
  [[nodiscard]] Rational operator()(const Rational& q) const { return poly_(q); }

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  QPoly poly_;
};

/// V~(t) = V(t + x): the origin-arrival problem equivalent to arrival at x.
/// A constant term can appear; it cancels in every V(q) - V(q') difference.
Potential shift_arrival(const Potential& v, const Rational& x);

}  // namespace supratoa
