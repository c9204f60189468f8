#include "supratoa/qpoly.hpp"

#include <cmath>
#include <sstream>

namespace supratoa {

QPoly::QPoly(Rational constant) { add_term(0, constant); }

QPoly::QPoly(Terms terms) {
  for (const auto& [d, c] : terms) add_term(d, c);
}

QPoly QPoly::monomial(int degree, Rational coeff) {
  QPoly p;
  p.add_term(degree, coeff);
  return p;
}

void QPoly::add_term(int degree, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational QPoly::coeff(int degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? Rational() : it->second;
}

Rational QPoly::operator()(const Rational& q) const {
  // Horner over the sparse degrees.
  Rational acc;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= q.pow(prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return prev > 0 ? acc * q.pow(prev) : acc;
}

double QPoly::eval(double q) const {
  double acc = 0.0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int i = it->first; i < prev; ++i) acc *= q;
    acc += it->second.to_double();
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc *= q;
  return acc;
}

QPoly QPoly::derivative() const {
  QPoly d;
  for (const auto& [deg, c] : terms_) {
    if (deg > 0) d.add_term(deg - 1, c * Rational(deg));
  }
  return d;
}

QPoly QPoly::antiderivative() const {
  QPoly a;
  for (const auto& [deg, c] : terms_) a.add_term(deg + 1, c / Rational(deg + 1));
  return a;
}

QPoly QPoly::pow(unsigned exponent) const {
  QPoly result(Rational(1));
  QPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

QPoly QPoly::shifted(const Rational& shift) const {
  QPoly out;
  for (const auto& [deg, c] : terms_) {
    for (int i = 0; i <= deg; ++i) {
      out.add_term(i, c * Rational::binomial(static_cast<unsigned>(deg), static_cast<unsigned>(i)) *
                          shift.pow(deg - i));
    }
  }
  return out;
}

QPoly QPoly::scaled(const Rational& scale) const {
  QPoly out;
  for (const auto& [deg, c] : terms_) out.add_term(deg, c * scale.pow(deg));
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  QPoly out;
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : rhs.terms_) out.add_term(da + db, ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

QPoly& QPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= rhs;
  return *this;
}

QPoly QPoly::operator-() const { return *this * Rational(-1); }

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [deg, c] = *it;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (deg == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "q";
    if (deg > 1) os << "^" << deg;
  }
  return os.str();
}

QPoly poly_shift(const QPoly& p, const Rational& x) { return p.shifted(x); }

QPoly poly_antideriv(const QPoly& p) { return p.antiderivative(); }

Rational poly_defint(const QPoly& p, const Rational& lo, const Rational& hi) {
  const QPoly a = p.antiderivative();
  return a(hi) - a(lo);
}

}  // namespace supratoa
