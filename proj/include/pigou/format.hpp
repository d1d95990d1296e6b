#ifndef PIGOU_FORMAT_HPP
#define PIGOU_FORMAT_HPP

#include <cstdio>
#include <string>

namespace pigou {

/// Renders a double with 12 significant digits. All emitters use this so
/// that identical inputs produce identical bytes.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace pigou

#endif
