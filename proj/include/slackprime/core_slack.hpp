#pragma once

#include "slackprime/common.hpp"

namespace slackprime {

// Slack of p against divisor d: the amount to add to p to reach the next
// multiple of d, i.e. d*(floor(p/d)+1) - p. Computed in remainder form so
// the intermediate product cannot wrap; the two forms are identical since
// d*(floor(p/d)+1) - p = d - p%d + (d*floor(p/d) + p%d - p) = d - p%d.
// Range [1, d]; equals d exactly when d divides p.
inline u64 slack(u64 p, u64 d) {
    if (d < 2) throw InputError("slack: divisor must be >= 2");
    if (p < 2) throw InputError("slack: p must be >= 2");
    return d - p % d;
}

// p mod d.
inline u64 remainder(u64 p, u64 d) {
    if (d < 2) throw InputError("remainder: divisor must be >= 2");
    return p % d;
}

// Maps a slack back to the remainder it came from: r = d - s.
// For d not dividing p, slack_remainder_dual(d, slack(p, d)) == p % d.
inline u64 slack_remainder_dual(u64 d, u64 s) {
    if (d < 2) throw InputError("slack_remainder_dual: divisor must be >= 2");
    if (s < 1 || s > d) throw InputError("slack_remainder_dual: slack outside [1, d]");
    return d - s;
}

// Exact fractional part of p/d, kept as an unreduced integer pair num/den
// with num = p mod d, den = d. Equal to p/d - floor(p/d).
struct Alpha {
    u64 num;
    u64 den;

    bool operator==(const Alpha&) const = default;
};

inline Alpha alpha(u64 p, u64 d) {
    if (d < 2) throw InputError("alpha: divisor must be >= 2");
    if (p < 1) throw InputError("alpha: p must be positive");
    return Alpha{p % d, d};
}

}  // namespace slackprime
