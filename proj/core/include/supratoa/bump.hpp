#pragma once

#include <complex>

namespace supratoa {

/// phi(q) = amplitude * exp(-1 / (1 - t^2)), t = (q - center) / halfwidth,
/// on |t| < 1 and zero outside.
struct BumpProfile {
  double center = 0.0;
  double halfwidth = 1.0;
  std::complex<double> amplitude{1.0, 0.0};

  BumpProfile() = default;
  /// Throws std::invalid_argument unless halfwidth > 0.
  BumpProfile(double center, double halfwidth, std::complex<double> amplitude = {1.0, 0.0});

  [[nodiscard]] double lo() const { return center - halfwidth; }
  [[nodiscard]] double hi() const { return center + halfwidth; }

  [[nodiscard]] std::complex<double> value(double q) const;
  [[nodiscard]] std::complex<double> derivative(double q) const;
  [[nodiscard]] std::complex<double> second_derivative(double q) const;
};

}  // namespace supratoa
