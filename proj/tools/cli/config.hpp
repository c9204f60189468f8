#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "supratoa/potential.hpp"
#include "supratoa/rational.hpp"

namespace supratoa::cli {

enum class Format { Json, Csv };

struct BumpSpec {
  double center = 0.0;
  double halfwidth = 0.5;
};

/// Flat "key = value" run configuration. '#' starts a comment.
struct RunConfig {
  Potential potential;
  Rational mu{1};
  Rational hbar{1};
  Rational x{0};
  int jmax = 8;
  std::optional<int> kmax;  ///< defaults to jmax
  std::optional<int> mmax;
  double quad_abs_tol = 1e-10;
  double series_tol = 1e-16;
  Format format = Format::Json;
  std::string out;  ///< empty: standard output

  double commutator_threshold = 1e-6;
  BumpSpec bump_phi{0.0, 0.5};
  BumpSpec bump_psi{0.1, 0.5};

  int grid_n = 50;
  double grid_lo = -1.0;
  double grid_hi = 1.0;
  std::string grid_kind = "kernel";  ///< kernel | toa | apply

  double q = 0.2;  ///< phase point for toa (and grid_kind = toa momentum via p)
  double p = 1.0;

  [[nodiscard]] int effective_kmax() const { return kmax.value_or(jmax); }
};

/// Throws ParseError naming the offending key or line.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

Format parse_format(std::string_view text);

/// A complete, commented sample configuration for the given command.
std::string seed_config(std::string_view command);

}  // namespace supratoa::cli
