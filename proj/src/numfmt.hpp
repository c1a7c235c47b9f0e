#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace lfc::detail {

// Shortest text that parses back to the same double.
inline std::string format_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// %.17g, the report rendering for reals.
inline std::string format_17g(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace lfc::detail
