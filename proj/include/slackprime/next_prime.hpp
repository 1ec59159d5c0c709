#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "slackprime/common.hpp"

namespace slackprime {

// Inclusive divisor range scanned for a prime p: [2, (p-1)/2].
struct DivisorRange {
    u64 lo;
    u64 hi;

    bool operator==(const DivisorRange&) const = default;
};

// Requires odd p >= 5. The method proper starts at 5; 2 and 3 are seeds.
DivisorRange divisor_range(u64 p);

// Working state for one prime: the slack of p against every divisor in
// divisor_range(p), plus a presence set over the even slack values.
struct SlackList {
    u64 p = 0;
    std::vector<std::pair<u64, u64>> entries;  // (d, s), d ascending
    std::vector<bool> even_present;            // slot e/2 - 1 holds "even slack e occurred"

    // e must be even and >= 2. Values past the tracked range are absent.
    bool has_even(u64 e) const {
        if (e < 2 || (e & 1) != 0) throw InputError("has_even: e must be even and >= 2");
        u64 slot = e / 2 - 1;
        return slot < even_present.size() && even_present[slot];
    }
};

// One entry per divisor in divisor_range(p). Throws InputError when p is
// even, < 5, or has a divisor in range (i.e. p is composite): every odd
// composite >= 9 has a factor <= (p-1)/2, so non-primes cannot slip through.
SlackList build_slack_list(u64 p);

// The even values eligible as the chosen slack E, with h = (p-1)/2:
//   in-range sweep: 2, 4, ..., hi_in_range, where hi_in_range = h-1 if h is
//   odd, h-2 if h is even (an empty sweep when hi_in_range < 2);
//   fallback: beyond = h if h is even, h+1 if h is odd -- the first even
//   value past the sweep, used when every in-range even is present.
struct EvenSearchRange {
    u64 lo;  // always 2
    u64 hi_in_range;
    u64 beyond;

    bool operator==(const EvenSearchRange&) const = default;
};

EvenSearchRange even_search_range(u64 p);

struct FirstMissingEven {
    u64 e;
    bool used_beyond_range;

    bool operator==(const FirstMissingEven&) const = default;
};

// Smallest even value in the in-range sweep absent from sl, or the beyond
// value (flagged) when the sweep is exhausted. Total: the beyond value can
// never occur as a slack, since every slack is <= (p-1)/2 - 1.
FirstMissingEven first_missing_even(const SlackList& sl);

struct NextPrimeResult {
    u64 p;
    u64 e;
    u64 successor;  // p + e
    bool used_beyond_range;

    bool operator==(const NextPrimeResult&) const = default;
};

// The slack method end to end: seeds 2 -> 3 and 3 -> 5, then for odd prime
// p >= 5 the successor p + first_missing_even(build_slack_list(p)).e.
// Primality of p is the caller's contract beyond the composite detection
// noted at build_slack_list.
NextPrimeResult next_prime_slack(u64 p);

// Output-identical to next_prime_slack but skips materializing the entries
// vector; the overload taking a workspace reuses its allocation across calls.
NextPrimeResult next_prime_slack_fast(u64 p);
NextPrimeResult next_prime_slack_fast(u64 p, std::vector<bool>& workspace);

// Iterated application: each successor feeds the next call. Length = count.
std::vector<NextPrimeResult> prime_sequence(u64 start, std::size_t count);

// Ceiling on any produced successor: p + (p-1)/2 + 1. Requires odd p >= 5.
u64 successor_upper_bound(u64 p);

// Ceiling on the successor's own divisor range: floor((3p-1)/4).
u64 max_divisor_bound(u64 p);

}  // namespace slackprime
