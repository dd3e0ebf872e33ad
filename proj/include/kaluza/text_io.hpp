#pragma once

#include <string>
#include <string_view>

#include "kaluza/number.hpp"

namespace kaluza {

/// 32 whitespace-separated decimals, d_0 first. Lines whose first
/// non-blank character is '#' are skipped. Throws ParseError on malformed or
/// non-finite values and on a coefficient count other than 32.
KaluzaNumber parse_number(std::string_view text);

/// Single line, shortest round-trip representation of each coefficient.
std::string format_number(const KaluzaNumber& x);

}  // namespace kaluza
