#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace baryquad {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNumerical = 1, kExitUsage = 2 };

/// Runs the `baryquad` command line with `args` (program name excluded).
/// Results go to `out`, diagnostics to `err`.
///
///   rule         emit nodes, quadrature weights and barycentric weights
///   interp       evaluate a barycentric interpolant at points from a file
///   convergence  error-versus-n table for one of the builtin experiments
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Formats with 17 significant digits, the round-trip precision of double.
std::string format_number(double x);

}  // namespace baryquad
