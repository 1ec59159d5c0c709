#include "slackprime/common.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace slackprime {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    if (std::strpbrk(buf, "eE") == nullptr) return buf;

    // %.10g fell back to scientific; reformat as fixed while keeping
    // 10 significant digits.
    double av = std::fabs(v);
    int exp10 = (av > 0.0) ? static_cast<int>(std::floor(std::log10(av))) : 0;
    int prec = 9 - exp10;
    if (prec < 0) prec = 0;
    if (prec > 40) prec = 40;
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

u64 fnv1a64(const std::string& bytes) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace slackprime
