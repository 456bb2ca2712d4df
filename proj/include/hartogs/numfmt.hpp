#pragma once

#include <cstdio>
#include <string>

namespace hartogs {

/// Decimal rendering used everywhere a double reaches an output file.
/// 12 significant digits round-trips the quantities we emit and keeps
/// reports byte-stable across runs.
inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace hartogs
