#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hgspec {

// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand; `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`.
//
//   radius FILE        spectral radius (+ optional truncated radial certificate)
//   lambda2 FILE       lambda_2 estimate (+ multi-center certificate if regular)
//   bounds --t --k     threshold, Friedman form, g monotonicity
//   verify [FILE] --check radial|g-monotone|acyclic-bound|alon-boppana|mu
//   gen hypertree|complete|random-regular ... [-o FILE]
//   sweep hypertree|cycle|complete|random-regular ... [-o FILE]
//
// Exit 0 on success, 1 when a checked inequality fails or an iterative
// computation gives up, 2 on usage, parse or precondition errors. The seed
// defaults to $HGSPEC_SEED (else 0); --seed overrides.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hgspec
