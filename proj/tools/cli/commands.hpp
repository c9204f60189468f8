#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace supratoa::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2 };

/// Command bodies. Each writes its table/report to `out` (or cfg.out) and
/// diagnostics to `err`, and returns an ExitCode.
int cmd_kernel(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classical_limit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_commutator(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_weyl_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_grid(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_toa(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line, without the program name:
///   <kernel|classical-limit|commutator|weyl-compare|grid|toa> --config FILE
///   [--out PATH] [--format json|csv] [--seed-config]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supratoa::cli
