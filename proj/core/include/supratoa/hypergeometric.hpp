#pragma once

namespace supratoa {

/// 0F1(; 1; z) = sum_n z^n / (n!)^2.
///
/// Summed with compensated addition until |term| < tol |partial sum| (at
/// least 8 terms). For z < -16 the series loses digits to cancellation and
/// the equivalent Bessel form J0(2 sqrt(-z)) is used instead. Throws
/// ArgumentTooNegative for z < -900 and NoConvergence if the sum overflows or
/// does not settle.
double hyper0f1(double z, double tol = 1e-16);

}  // namespace supratoa
