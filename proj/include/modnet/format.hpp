#pragma once

#include <cstdio>
#include <string>

namespace modnet {

/// Decimal text of a double with 17 significant digits; parsing the
/// result recovers the exact binary64 value.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace modnet
