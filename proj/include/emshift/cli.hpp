#pragma once

#include <iosfwd>
#include <optional>

#include "emshift/states.hpp"

namespace emshift::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Parse "RE,IM" (or a bare "RE"). Returns nullopt on malformed input.
std::optional<Complex> parse_complex(const std::string& text);

/// Entry point for the `emshift` tool: subcommands verify, shift, sweep, scenario.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace emshift::cli
