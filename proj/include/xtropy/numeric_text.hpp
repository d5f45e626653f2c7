#pragma once

#include <string>
#include <string_view>

namespace xtropy {

/// Shortest decimal string that parses back to exactly `x`.
std::string shortest_repr(double x);

/// Shortest round-trip form that always reads as a real: integral values get a
/// trailing ".0" ("-1.0" rather than "-1"). Non-finite values render as
/// "inf", "-inf", "nan".
std::string format_real(double x);

/// Strict full-string parse. Throws std::invalid_argument.
double parse_real(std::string_view text);

}  // namespace xtropy
