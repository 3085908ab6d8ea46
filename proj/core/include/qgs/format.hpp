#pragma once

#include <cstdio>
#include <string>

namespace qgs {

// All numeric output goes through this: 17 significant digits round-trip a
// double exactly, and the fixed format keeps files byte-identical run to run.
inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace qgs
