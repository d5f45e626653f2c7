#include "xtropy/numeric_text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace xtropy {

std::string shortest_repr(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
    return std::string(buf.data(), end);
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::string s = shortest_repr(x);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

double parse_real(std::string_view text) {
    // from_chars rejects a leading '+'
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace xtropy
