#pragma once

#include <cstdio>
#include <string>

namespace achlioptas {

/// Floating value with 10 significant digits, the precision used by all CSV
/// emitters. snprintf keeps the byte output independent of stream state.
inline std::string format_g10(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

} // namespace achlioptas
