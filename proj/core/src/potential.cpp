#include "supratoa/potential.hpp"

namespace supratoa {

Potential Potential::linear(const Rational& a, const Rational& b) {
  return Potential(QPoly::monomial(1, a) + QPoly::monomial(2, b / Rational(2)));
}

Potential Potential::harmonic(const Rational& mu, const Rational& omega) {
  return Potential(QPoly::monomial(2, mu * omega * omega / Rational(2)));
}

Potential Potential::quartic(const Rational& lambda) { return Potential(QPoly::monomial(4, lambda)); }

bool Potential::is_free() const {
  // Constants do not act on the dynamics.
  return poly_.degree() <= 0;
}

Potential shift_arrival(const Potential& v, const Rational& x) { return Potential(poly_shift(v.poly(), x)); }

}  // namespace supratoa
