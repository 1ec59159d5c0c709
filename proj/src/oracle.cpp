#include "slackprime/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace slackprime {

u64 mem_budget() {
    const char* env = std::getenv("SLACKPRIME_MEM_BUDGET");
    if (env == nullptr || *env == '\0') return u64{1} << 30;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) throw InputError("SLACKPRIME_MEM_BUDGET: not a positive byte count");
    return static_cast<u64>(v);
}

static u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

PrimeTable::PrimeTable(u64 limit) : limit_(limit) {
    if (limit < 2) throw InputError("PrimeTable: limit must be >= 2");
    u64 half = (limit + 1) / 2;            // indexes odd numbers 1,3,5,... up to limit
    u64 nwords = (half + 63) / 64;
    if (nwords * 8 > mem_budget())
        throw CapacityError("sieve_upto: bitmap for limit " + std::to_string(limit) +
                            " exceeds memory budget");
    words_.assign(nwords, ~u64{0});
    words_[0] &= ~u64{1};                  // 1 is not prime

    // clear bits past limit
    for (u64 k = half; k < nwords * 64; ++k)
        words_[k >> 6] &= ~(u64{1} << (k & 63));

    u64 root = isqrt_u64(limit);
    for (u64 f = 3; f <= root; f += 2) {
        if (!((words_[(f >> 1) >> 6] >> ((f >> 1) & 63)) & 1)) continue;
        for (u64 m = f * f; m <= limit; m += 2 * f) {
            u64 k = m >> 1;
            words_[k >> 6] &= ~(u64{1} << (k & 63));
        }
    }

    count_ = 1;  // the prime 2
    for (u64 w : words_) count_ += static_cast<u64>(__builtin_popcountll(w));
}

std::vector<u64> PrimeTable::primes() const {
    std::vector<u64> out;
    out.reserve(count_);
    for_each_prime([&](u64 p) { out.push_back(p); });
    return out;
}

void PrimeTable::for_each_prime(const std::function<void(u64)>& fn) const {
    fn(2);
    for (u64 wi = 0; wi < words_.size(); ++wi) {
        u64 w = words_[wi];
        while (w) {
            unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
            w &= w - 1;
            u64 n = ((wi << 6) + bit) * 2 + 1;
            if (n > limit_) return;
            fn(n);
        }
    }
}

PrimeTable sieve_upto(u64 n) {
    return PrimeTable(n);
}

void segmented_for_each(u64 lo, u64 hi, const std::function<void(u64)>& fn,
                        u64 segment_candidates) {
    if (lo < 2 || lo > hi) throw InputError("segmented_sieve: need 2 <= lo <= hi");
    if (segment_candidates < 64) throw InputError("segmented_sieve: segment too small");

    u64 root = isqrt_u64(hi);
    std::vector<u64> base;
    if (root >= 3) {
        PrimeTable t(root);
        t.for_each_prime([&](u64 p) { if (p >= 3) base.push_back(p); });
    }

    if (lo <= 2) fn(2);

    // odd candidates only; segment holds segment_candidates/2 odds
    std::vector<char> seg;
    u64 start = (lo <= 3) ? 3 : (lo | 1);
    while (start <= hi) {
        u64 end = hi - start < segment_candidates - 1 ? hi : start + segment_candidates - 1;
        u64 n_odds = (end - start) / 2 + 1;
        seg.assign(n_odds, 1);
        for (u64 p : base) {
            u64 p2 = p * p;
            u64 first;
            if (p2 >= start) {
                first = p2;
            } else {
                first = ((start + p - 1) / p) * p;
                if ((first & 1) == 0) first += p;  // only odd multiples are in the segment
            }
            for (u64 m = first; m <= end; m += 2 * p)
                seg[(m - start) / 2] = 0;
        }
        for (u64 k = 0; k < n_odds; ++k)
            if (seg[k]) fn(start + 2 * k);
        if (end == hi) break;
        start = end + 1;
        if ((start & 1) == 0) ++start;
    }
}

std::vector<u64> segmented_sieve(u64 lo, u64 hi, u64 segment_candidates) {
    if (lo < 2 || lo > hi) throw InputError("segmented_sieve: need 2 <= lo <= hi");
    u64 worst_case = (hi - lo) / 2 + 2;
    if (worst_case > mem_budget() / 8)
        throw CapacityError("segmented_sieve: result for span " + std::to_string(hi - lo) +
                            " may exceed memory budget");
    std::vector<u64> out;
    segmented_for_each(lo, hi, [&](u64 p) { out.push_back(p); }, segment_candidates);
    return out;
}

bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if ((n & 1) == 0) return false;
    for (u64 d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 next_prime_oracle(u64 n) {
    if (n < 2) throw InputError("next_prime_oracle: n must be >= 2");
    if (n == 2) return 3;
    u64 c = checked_add(n, 1);
    if ((c & 1) == 0) c = checked_add(c, 1);
    while (!is_prime_trial(c)) c = checked_add(c, 2);
    return c;
}

u64 nth_prime_bound(u64 i) {
    if (i < 6) return 13;
    double di = static_cast<double>(i);
    double b = di * (std::log(di) + std::log(std::log(di)));
    return static_cast<u64>(b) + 2;
}

u64 nth_prime(u64 i) {
    if (i < 1) throw InputError("nth_prime: index must be >= 1");
    static const u64 small[] = {2, 3, 5, 7, 11, 13};
    if (i <= 6) return small[i - 1];
    PrimeTable t(nth_prime_bound(i));  // CapacityError if the bound exceeds the budget
    u64 seen = 0;
    u64 result = 0;
    t.for_each_prime([&](u64 p) {
        if (++seen == i) result = p;
    });
    if (result == 0) throw std::runtime_error("internal: nth_prime bound too small");
    return result;
}

u64 prime_count(u64 n) {
    if (n < 2) return 0;
    return PrimeTable(n).count();
}

}  // namespace slackprime
