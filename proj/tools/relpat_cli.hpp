#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "relpat/reversal.hpp"

namespace relpat::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,
  parse_error = 2,
  precondition = 3,
  budget = 4,
};

/// Runs one invocation. `args` excludes the program name. JSON (or plain
/// text with --plain) goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// "x1 x2^rev x1" -> signed variables. Throws ParseError.
SignedPattern parse_signed_pattern(std::string_view text);

/// "(1,1,1);(2,1,2)" -> decompositions. Throws ParseError.
std::vector<Decomposition> parse_decompositions(std::string_view text);

}  // namespace relpat::cli
