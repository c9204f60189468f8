#include "supratoa/hypergeometric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "supratoa/errors.hpp"

namespace supratoa {

namespace {
constexpr double kMostNegative = -900.0;
constexpr double kBesselBelow = -16.0;
constexpr int kMinTerms = 8;
constexpr int kMaxTerms = 100000;
}  // namespace

double hyper0f1(double z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("hyper0f1 tolerance must be positive");
  if (std::isnan(z)) throw NoConvergence("hyper0f1 argument is NaN");
  if (z < kMostNegative) {
    throw ArgumentTooNegative("0F1(1; z) with z = " + std::to_string(z) + " is below -900");
  }
  if (z < kBesselBelow) return std::cyl_bessel_j(0.0, 2.0 * std::sqrt(-z));

  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= z / (static_cast<double>(n) * n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (!std::isfinite(sum)) throw NoConvergence("0F1(1; z) overflowed at z = " + std::to_string(z));
    if (n + 1 >= kMinTerms && std::abs(term) < tol * std::abs(sum)) return sum;
  }
  throw NoConvergence("0F1(1; z) did not settle at z = " + std::to_string(z));
}

}  // namespace supratoa
