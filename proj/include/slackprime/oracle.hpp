#pragma once

#include <functional>
#include <vector>

#include "slackprime/common.hpp"

namespace slackprime {

// Odd-only primality bitmap over [2, limit]. Immutable once built; safe to
// share across threads.
class PrimeTable {
public:
    explicit PrimeTable(u64 limit);

    u64 limit() const { return limit_; }

    // n must be <= limit().
    bool is_prime(u64 n) const {
        if (n > limit_) throw InputError("PrimeTable: query beyond table limit");
        if (n < 3) return n == 2;
        if ((n & 1) == 0) return false;
        u64 k = n >> 1;  // odd n == 2k+1
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    // pi(limit), cached at construction.
    u64 count() const { return count_; }

    std::vector<u64> primes() const;

    void for_each_prime(const std::function<void(u64)>& fn) const;

private:
    u64 limit_;
    u64 count_ = 0;
    std::vector<u64> words_;  // bit k <=> 2k+1 is prime
};

inline constexpr u64 kDefaultSegmentCandidates = u64{1} << 20;

// Allocation cap for sieve tables, in bytes. Reads SLACKPRIME_MEM_BUDGET
// from the environment on every call; defaults to 1 GiB.
u64 mem_budget();

// Exact primality for [2, n]. Throws CapacityError when the bitmap would
// exceed mem_budget().
PrimeTable sieve_upto(u64 n);

// Primes in the closed interval [lo, hi], ascending. Requires 2 <= lo <= hi.
std::vector<u64> segmented_sieve(u64 lo, u64 hi,
                                 u64 segment_candidates = kDefaultSegmentCandidates);

// Streaming variant: fn(p) for each prime p in [lo, hi], ascending.
void segmented_for_each(u64 lo, u64 hi, const std::function<void(u64)>& fn,
                        u64 segment_candidates = kDefaultSegmentCandidates);

// Deterministic trial division up to sqrt(n). No probabilistic tests.
bool is_prime_trial(u64 n);

// Smallest prime strictly greater than n. Requires n >= 2.
u64 next_prime_oracle(u64 n);

// The i-th prime, 1-based (nth_prime(1) == 2).
u64 nth_prime(u64 i);

// Upper bound on the i-th prime, suitable as a sieve limit.
u64 nth_prime_bound(u64 i);

// pi(n), exact.
u64 prime_count(u64 n);

}  // namespace slackprime
