#include "slackprime/next_prime.hpp"

#include <string>

namespace slackprime {

namespace {

void require_method_domain(u64 p, const char* who) {
    if (p < 5) throw InputError(std::string(who) + ": p must be >= 5 (2 and 3 are seeds)");
    if ((p & 1) == 0) throw InputError(std::string(who) + ": p must be odd");
}

}  // namespace

DivisorRange divisor_range(u64 p) {
    require_method_domain(p, "divisor_range");
    return DivisorRange{2, (p - 1) / 2};
}

EvenSearchRange even_search_range(u64 p) {
    require_method_domain(p, "even_search_range");
    u64 h = (p - 1) / 2;
    u64 hi_in_range = (h & 1) ? h - 1 : h - 2;
    u64 beyond = (h & 1) ? h + 1 : h;
    return EvenSearchRange{2, hi_in_range, beyond};
}

SlackList build_slack_list(u64 p) {
    DivisorRange range = divisor_range(p);
    SlackList sl;
    sl.p = p;
    sl.entries.reserve(range.hi - range.lo + 1);
    // Slacks are <= d - 1 <= hi - 1, so evens up to hi - 1 need slots.
    sl.even_present.assign((range.hi - 1) / 2, false);
    for (u64 d = range.lo; d <= range.hi; ++d) {
        u64 r = p % d;
        if (r == 0)
            throw InputError("build_slack_list: " + std::to_string(p) + " is divisible by " +
                             std::to_string(d) + " — not prime");
        u64 s = d - r;
        sl.entries.emplace_back(d, s);
        if ((s & 1) == 0) sl.even_present[s / 2 - 1] = true;
    }
    return sl;
}

FirstMissingEven first_missing_even(const SlackList& sl) {
    EvenSearchRange range = even_search_range(sl.p);
    for (u64 e = range.lo; e <= range.hi_in_range; e += 2)
        if (!sl.has_even(e)) return FirstMissingEven{e, false};
    return FirstMissingEven{range.beyond, true};
}

NextPrimeResult next_prime_slack(u64 p) {
    if (p == 2) return NextPrimeResult{2, 1, 3, false};
    if (p == 3) return NextPrimeResult{3, 2, 5, false};
    SlackList sl = build_slack_list(p);
    FirstMissingEven fme = first_missing_even(sl);
    return NextPrimeResult{p, fme.e, checked_add(p, fme.e), fme.used_beyond_range};
}

NextPrimeResult next_prime_slack_fast(u64 p, std::vector<bool>& workspace) {
    if (p == 2) return NextPrimeResult{2, 1, 3, false};
    if (p == 3) return NextPrimeResult{3, 2, 5, false};
    require_method_domain(p, "next_prime_slack_fast");
    u64 h = (p - 1) / 2;
    u64 hi_in_range = (h & 1) ? h - 1 : h - 2;
    u64 beyond = (h & 1) ? h + 1 : h;
    // Only evens inside the in-range sweep are ever queried, so presence is
    // tracked for those alone; slot e/2 - 1 as in SlackList::has_even.
    u64 slots = hi_in_range / 2;
    workspace.assign(slots, false);
    // Walk divisors in quotient segments: within a run of d sharing
    // q = floor(p/d), the slack s = d*(q+1) - p advances by q+1 per step, so
    // each divisor costs additions instead of a division. The values are the
    // same d - p%d the per-divisor form produces, including s == d exactly
    // when d divides p.
    u64 d = 2;
    while (d <= h) {
        u64 q = p / d;
        u64 seg_end = p / q;
        if (seg_end > h) seg_end = h;
        u64 s = d * (q + 1) - p;
        u64 step = q + 1;
        for (; d <= seg_end; ++d, s += step) {
            if (s == d)
                throw InputError("build_slack_list: " + std::to_string(p) +
                                 " is divisible by " + std::to_string(d) + " — not prime");
            if ((s & 1) == 0 && s <= hi_in_range) workspace[s / 2 - 1] = true;
        }
    }
    for (u64 e = 2; e <= hi_in_range; e += 2)
        if (!workspace[e / 2 - 1]) return NextPrimeResult{p, e, checked_add(p, e), false};
    return NextPrimeResult{p, beyond, checked_add(p, beyond), true};
}

NextPrimeResult next_prime_slack_fast(u64 p) {
    std::vector<bool> workspace;
    return next_prime_slack_fast(p, workspace);
}

std::vector<NextPrimeResult> prime_sequence(u64 start, std::size_t count) {
    if (count < 1) throw InputError("prime_sequence: count must be >= 1");
    std::vector<NextPrimeResult> out;
    out.reserve(count);
    u64 cur = start;
    for (std::size_t i = 0; i < count; ++i) {
        NextPrimeResult res = next_prime_slack(cur);
        out.push_back(res);
        cur = res.successor;
    }
    return out;
}

u64 successor_upper_bound(u64 p) {
    require_method_domain(p, "successor_upper_bound");
    return checked_add(p, (p - 1) / 2 + 1);
}

u64 max_divisor_bound(u64 p) {
    require_method_domain(p, "max_divisor_bound");
    unsigned __int128 t = static_cast<unsigned __int128>(p) * 3 - 1;
    return static_cast<u64>(t / 4);
}

}  // namespace slackprime
