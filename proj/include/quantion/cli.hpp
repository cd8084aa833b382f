#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quantion/quantal.hpp"

namespace quantion::cli {

/// Exit codes: 0 success, 1 verification or algebraic failure, 2 usage or input error.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "hermitian:N", "realsym:N" or "poisson:D". Throws UsageError.
AnyAlgebra parse_algebra_spec(const std::string& spec);

/// Runs `qtn` with args (without the program name); never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quantion::cli
