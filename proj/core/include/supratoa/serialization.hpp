#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "supratoa/graded_kernel.hpp"
#include "supratoa/kernel_operator.hpp"
#include "supratoa/momentum_series.hpp"
#include "supratoa/potential.hpp"

namespace supratoa {

/// [[deg, "num/den"], ...] in ascending degree.
nlohmann::json poly_to_json(const QPoly& p);
QPoly poly_from_json(const nlohmann::json& j);

/// {"potential": [...], "mu": "num/den", "jmax": J, "mmax": M,
///  "entries": [{"m","j","s","coeff"}, ...]}
nlohmann::json kernel_to_json(const GradedKernel& k);
GradedKernel kernel_from_json(const nlohmann::json& j);

/// [{"k": k, "s": s, "poly": [...]}, ...]
nlohmann::json series_to_json(const MomentumSeries& t);
MomentumSeries series_from_json(const nlohmann::json& j);

/// {"residual": r, "error_budget": e, "params": params}
nlohmann::json residual_to_json(const CommutatorReport& rep, const nlohmann::json& params);

/// CSV with header "q,re,im"; '.' decimals, 17 significant digits.
void write_sampled_csv(std::ostream& os, const std::vector<double>& q, const std::vector<std::complex<double>>& values);

/// Shortest round-tripping decimal form of a double, locale independent.
std::string format_double(double x);

}  // namespace supratoa
