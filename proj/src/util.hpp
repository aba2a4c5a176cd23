#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace resjoin {

/// %.12g rendering used for every number the tools emit.
inline std::string format_sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Round through the 12-significant-digit text form so printed JSON numbers
/// reparse to the exact double that was written.
inline double round_sig12(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_sig12(x).c_str(), nullptr);
}

/// JSON value for a double: 12 significant digits, null when non-finite.
inline nlohmann::json json_num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round_sig12(x);
}

} // namespace resjoin
