#include "supratoa/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace supratoa {

namespace {

struct Local {
  double t = 0.0;
  double base = 0.0;  // exp(-1/(1-t^2)), zero off support
};

Local locate(const BumpProfile& b, double q) {
  const double t = (q - b.center) / b.halfwidth;
  const double one_minus = 1.0 - t * t;
  if (!(one_minus > 0.0)) return {t, 0.0};
  return {t, std::exp(-1.0 / one_minus)};
}

}  // namespace

BumpProfile::BumpProfile(double c, double w, std::complex<double> a) : center(c), halfwidth(w), amplitude(a) {
  if (!(w > 0.0)) throw std::invalid_argument("bump halfwidth must be positive");
}

std::complex<double> BumpProfile::value(double q) const { return amplitude * locate(*this, q).base; }

std::complex<double> BumpProfile::derivative(double q) const {
  const Local l = locate(*this, q);
  if (l.base == 0.0) return {0.0, 0.0};
  const double s = 1.0 - l.t * l.t;
  const double f1 = -2.0 * l.t / (s * s);
  return amplitude * (l.base * f1 / halfwidth);
}

std::complex<double> BumpProfile::second_derivative(double q) const {
  const Local l = locate(*this, q);
  if (l.base == 0.0) return {0.0, 0.0};
  const double s = 1.0 - l.t * l.t;
  const double f1 = -2.0 * l.t / (s * s);
  const double f2 = -(2.0 + 6.0 * l.t * l.t) / (s * s * s);
  return amplitude * (l.base * (f1 * f1 + f2) / (halfwidth * halfwidth));
}

}  // namespace supratoa
