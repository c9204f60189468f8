#include "supratoa/rational.hpp"

#include <cctype>
#include <ostream>

#include "supratoa/errors.hpp"

namespace supratoa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  if (is_integer_literal(s)) return Rational(mpq_class(parse_integer(s)));

  // Exact decimal: [sign]digits.digits
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  throw ParseError("malformed rational '" + std::string(text) + "'");
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  if (k > n) return Rational();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational Rational::odd_double_factorial(unsigned k) {
  if (k == 0) return Rational(1);
  mpz_class f;
  mpz_2fac_ui(f.get_mpz_t(), 2 * k - 1);
  return Rational(mpq_class(f));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero();
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace supratoa
