#include "olad/format.hpp"

#include <charconv>
#include <system_error>

namespace olad {

namespace {

std::string to_chars_fixed(double value, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

} // namespace

std::string to_fixed3(double value) {
    // -0.000 and 0.000 must not both appear in golden files
    if (value == 0.0) return "0.000";
    return to_chars_fixed(value, 3);
}

std::string to_compact(double value) {
    std::string s = to_chars_fixed(value, 3);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

} // namespace olad
