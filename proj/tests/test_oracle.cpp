#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "slackprime/oracle.hpp"

using namespace slackprime;

namespace {

const std::vector<u64> kPrimesTo100 = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

struct BudgetGuard {
    explicit BudgetGuard(const char* value) { setenv("SLACKPRIME_MEM_BUDGET", value, 1); }
    ~BudgetGuard() { unsetenv("SLACKPRIME_MEM_BUDGET"); }
};

}  // namespace

TEST_CASE("bitmap table agrees with a hand list below 100") {
    PrimeTable t(100);
    CHECK(t.limit() == 100);
    CHECK(t.count() == 25);
    std::vector<u64> got = t.primes();
    CHECK(got == kPrimesTo100);
    std::size_t k = 0;
    for (u64 n = 0; n <= 100; ++n) {
        bool expected = k < kPrimesTo100.size() && kPrimesTo100[k] == n;
        CHECK(t.is_prime(n) == expected);
        if (expected) ++k;
    }
}

TEST_CASE("table edge cases") {
    CHECK_THROWS_AS(PrimeTable(0), InputError);
    CHECK_THROWS_AS(PrimeTable(1), InputError);
    PrimeTable two(2);
    CHECK(two.count() == 1);
    CHECK(two.primes() == std::vector<u64>{2});
    CHECK(two.is_prime(2));
    CHECK_FALSE(two.is_prime(0));
    CHECK_FALSE(two.is_prime(1));
    CHECK_THROWS_AS(two.is_prime(3), InputError);
    PrimeTable three(3);
    CHECK(three.count() == 2);
    CHECK(three.is_prime(3));
}

TEST_CASE("prime counting checkpoints") {
    CHECK(PrimeTable(30).count() == 10);
    CHECK(PrimeTable(10000).count() == 1229);
    CHECK(PrimeTable(100000).count() == 9592);
    CHECK(prime_count(1000000) == 78498);
    CHECK(prime_count(0) == 0);
    CHECK(prime_count(1) == 0);
    CHECK(prime_count(2) == 1);
}

TEST_CASE("for_each_prime visits the same sequence as primes()") {
    PrimeTable t(10000);
    std::vector<u64> walked;
    t.for_each_prime([&](u64 p) { walked.push_back(p); });
    CHECK(walked == t.primes());
    CHECK(walked.size() == 1229);
}

TEST_CASE("segmented sieve worked examples") {
    CHECK(segmented_sieve(90, 100) == std::vector<u64>{97});
    CHECK(segmented_sieve(1000001, 1000100) ==
          std::vector<u64>{1000003, 1000033, 1000037, 1000039, 1000081, 1000099});
    CHECK(segmented_sieve(2, 30).size() == 10);
    CHECK(segmented_sieve(2, 2) == std::vector<u64>{2});
    CHECK(segmented_sieve(3, 3) == std::vector<u64>{3});
    CHECK(segmented_sieve(14, 16).empty());
}

TEST_CASE("segmented sieve agrees with the bitmap table on random intervals") {
    PrimeTable t(1000000);
    std::vector<u64> all = t.primes();
    std::mt19937_64 rng(0x0eac1e01ULL);
    for (int i = 0; i < 50; ++i) {
        u64 lo = 2 + rng() % 990000;
        u64 hi = lo + 5000;
        std::vector<u64> expected;
        for (u64 p : all)
            if (p >= lo && p <= hi) expected.push_back(p);
        CHECK(segmented_sieve(lo, hi) == expected);
    }
}

TEST_CASE("segment size does not change the result") {
    PrimeTable t(10000);
    CHECK(segmented_sieve(2, 10000, 64) == t.primes());
    CHECK(segmented_sieve(2, 10000, 101) == t.primes());
    CHECK_THROWS_AS(segmented_sieve(2, 100, 63), InputError);
}

TEST_CASE("segmented sieve rejects bad ranges") {
    CHECK_THROWS_AS(segmented_sieve(1, 10), InputError);
    CHECK_THROWS_AS(segmented_sieve(0, 10), InputError);
    CHECK_THROWS_AS(segmented_sieve(10, 9), InputError);
}

TEST_CASE("trial division agrees with the table") {
    PrimeTable t(20000);
    for (u64 n = 0; n <= 20000; ++n) CHECK(is_prime_trial(n) == (n >= 2 && t.is_prime(n)));
    CHECK(is_prime_trial(999983));
    CHECK_FALSE(is_prime_trial(999981));
    CHECK(is_prime_trial(1000003));
    CHECK_FALSE(is_prime_trial(1000005));
}

TEST_CASE("next prime oracle") {
    CHECK(next_prime_oracle(2) == 3);
    CHECK(next_prime_oracle(3) == 5);
    CHECK(next_prime_oracle(5) == 7);
    CHECK(next_prime_oracle(7) == 11);
    CHECK(next_prime_oracle(13) == 17);
    CHECK(next_prime_oracle(89) == 97);
    CHECK(next_prime_oracle(113) == 127);
    CHECK(next_prime_oracle(999983) == 1000003);
    CHECK_THROWS_AS(next_prime_oracle(0), InputError);
    CHECK_THROWS_AS(next_prime_oracle(1), InputError);
}

TEST_CASE("nth prime checkpoints") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(2) == 3);
    CHECK(nth_prime(3) == 5);
    CHECK(nth_prime(4) == 7);
    CHECK(nth_prime(5) == 11);
    CHECK(nth_prime(6) == 13);
    CHECK(nth_prime(7) == 17);
    CHECK(nth_prime(103) == 563);
    CHECK(nth_prime(10000) == 104729);
    CHECK(nth_prime(10001) == 104743);
    CHECK(nth_prime(100000) == 1299709);
    CHECK_THROWS_AS(nth_prime(0), InputError);
}

TEST_CASE("prime_count inverts nth_prime") {
    for (u64 i = 1; i <= 50; ++i) CHECK(prime_count(nth_prime(i)) == i);
    CHECK(prime_count(nth_prime(1229)) == 1229);
    CHECK(prime_count(nth_prime(9592)) == 9592);
}

TEST_CASE("memory budget is enforced and restored") {
    {
        BudgetGuard guard("1000");
        CHECK(mem_budget() == 1000);
        CHECK_THROWS_AS(sieve_upto(10000000), CapacityError);
        CHECK_THROWS_AS(segmented_sieve(2, 100000000), CapacityError);
        // a small request still fits the tiny budget
        CHECK(sieve_upto(100).count() == 25);
    }
    {
        BudgetGuard guard("notanumber");
        CHECK_THROWS_AS(mem_budget(), InputError);
        CHECK_THROWS_AS(sieve_upto(100), InputError);
    }
    {
        BudgetGuard guard("0");
        CHECK_THROWS_AS(mem_budget(), InputError);
    }
    CHECK(mem_budget() == u64{1} << 30);
    CHECK(sieve_upto(10000000).count() == 664579);
}
