#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kaluza/number.hpp"

namespace kaluza::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Operand resolution: a basis symbol ("1", "-1", "e5", "-e17"), a file path,
/// or 32 inline numbers separated by blanks or commas. Throws ParseError or
/// std::invalid_argument; the message names the operand source.
KaluzaNumber resolve_operand(std::string_view text);

}  // namespace kaluza::cli
