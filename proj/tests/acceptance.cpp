// Acceptance gate: one binary, one printed line per criterion.
//
//   usage: acceptance [--full]
//
// --full additionally replicates the hundred-thousand-prime campaign
// (several extra minutes of single-core work).
//
// Every expected constant below was derived from the independent sieve and
// trial-division oracles before being frozen here; tolerances are pinned at
// the point of use.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "slackprime/core_slack.hpp"
#include "slackprime/gap_analysis.hpp"
#include "slackprime/next_prime.hpp"
#include "slackprime/oracle.hpp"
#include "slackprime/twin_constraints.hpp"
#include "slackprime/verify_harness.hpp"

using namespace slackprime;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int n, bool pass, const std::string& detail) {
    std::printf("%s %2d  %s\n", pass ? "PASS" : "FAIL", n, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    va_list args;
    va_start(args, f);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

std::map<u64, u64> as_map(const SlackList& list) {
    return {list.entries.begin(), list.entries.end()};
}

// --- 1: slack tables ------------------------------------------------------

void criterion_1() {
    auto t0 = clock_type::now();
    bool ok = as_map(build_slack_list(11)) ==
                  std::map<u64, u64>{{2, 1}, {3, 1}, {4, 1}, {5, 4}} &&
              as_map(build_slack_list(29)) ==
                  std::map<u64, u64>{{2, 1},
                                     {3, 1},
                                     {4, 3},
                                     {5, 1},
                                     {6, 1},
                                     {7, 6},
                                     {8, 3},
                                     {9, 7},
                                     {10, 1},
                                     {11, 4},
                                     {12, 7},
                                     {13, 10},
                                     {14, 13}} &&
              as_map(build_slack_list(7)) == std::map<u64, u64>{{2, 1}, {3, 2}} &&
              as_map(build_slack_list(5)) == std::map<u64, u64>{{2, 1}};
    double dt = seconds_since(t0);
    ok = ok && dt < 0.001;
    report(1, ok, fmt("slack tables for 11, 29, 7, 5 reproduce exactly (%.3f ms)", dt * 1e3));
}

// --- 2: worked successor examples ----------------------------------------

void criterion_2() {
    auto t0 = clock_type::now();
    bool ok = next_prime_slack(5) == NextPrimeResult{5, 2, 7, true} &&
              next_prime_slack(7) == NextPrimeResult{7, 4, 11, true} &&
              next_prime_slack(11) == NextPrimeResult{11, 2, 13, false} &&
              next_prime_slack(29) == NextPrimeResult{29, 2, 31, false};
    double dt = seconds_since(t0);
    ok = ok && dt < 0.001;
    report(2, ok,
           fmt("worked examples 5->7, 7->11, 11->13, 29->31 with E = 2,4,2,2 and "
               "beyond-range flags (%.3f ms)",
               dt * 1e3));
}

// --- 3: replication campaigns --------------------------------------------

CampaignReport campaign_base;
CampaignReport campaign_full;
bool ran_full = false;

bool well_formed(const DiscrepancyRecord& d, const CampaignConfig& cfg) {
    return d.index >= cfg.start_index && d.index < cfg.start_index + cfg.count &&
           is_prime_trial(d.p) && !d.claim_kind.empty();
}

void criterion_3(bool full) {
    {
        auto t0 = clock_type::now();
        CampaignConfig cfg;
        cfg.kind = CampaignKind::next_prime;
        cfg.start_index = 3;
        cfg.count = 9998;  // prime indices 3..10000
        campaign_base = run_campaign(cfg);
        double dt = seconds_since(t0);

        // Independent fault-injection probe: a wrong claim must surface as a
        // well-formed discrepancy record, because a clean report is only
        // meaningful if the adjudicator can actually catch errors.
        CampaignConfig probe_cfg;
        probe_cfg.kind = CampaignKind::next_prime;
        probe_cfg.start_index = 3;
        probe_cfg.count = 50;
        CampaignReport probe =
            run_next_prime_campaign_with(probe_cfg, [](u64 p, std::vector<bool>& ws) {
                NextPrimeResult r = next_prime_slack_fast(p, ws);
                if (p == 13) {
                    r.successor = 19;
                    r.e = 6;
                }
                return r;
            });
        bool probe_ok = probe.discrepancies.size() == 1 &&
                        well_formed(probe.discrepancies[0], probe_cfg) &&
                        probe.discrepancies[0].p == 13 && probe.discrepancies[0].claimed == 19 &&
                        probe.discrepancies[0].oracle == 17;

        bool ok = campaign_base.complete && campaign_base.primes_checked == 9998 &&
                  campaign_base.discrepancies.empty() && dt < 10.0 && probe_ok;
        report(3, ok,
               fmt("campaign over prime indices 3..10000: %zu discrepancies in %.2f s "
                   "(limit 10 s); fault-injection probe caught %zu/1",
                   campaign_base.discrepancies.size(), dt, probe.discrepancies.size()));
    }
    if (full) {
        auto t0 = clock_type::now();
        CampaignConfig cfg;
        cfg.kind = CampaignKind::next_prime;
        cfg.start_index = 3;
        cfg.count = 99998;  // prime indices 3..100000
        cfg.fast = true;    // segmented divisor walk, verified bit-identical
        campaign_full = run_campaign(cfg);
        ran_full = true;
        double dt = seconds_since(t0);
        bool ok = campaign_full.complete && campaign_full.primes_checked == 99998 &&
                  campaign_full.discrepancies.empty() && nth_prime(100000) == 1299709 &&
                  dt < 600.0;
        report(3, ok,
               fmt("full replication over prime indices 3..100000 (last prime 1299709): "
                   "%zu discrepancies in %.1f s (limit 600 s)",
                   campaign_full.discrepancies.size(), dt));
    }
}

// --- 4: gap bound below one million --------------------------------------

void criterion_4() {
    auto t0 = clock_type::now();
    CampaignConfig cfg;
    cfg.kind = CampaignKind::gap_bound;
    cfg.start_index = 1;
    cfg.count = 78497;  // every consecutive pair below 10^6
    CampaignReport r = run_campaign(cfg);
    double dt = seconds_since(t0);
    bool ok = r.complete && r.primes_checked == 78497 && r.discrepancies.empty() &&
              r.max_observed_gap == 114 && dt < 5.0;
    report(4, ok,
           fmt("gap <= floor((p+1)/2) for all %llu pairs below 10^6, max gap %llu, "
               "%zu violations (%.2f s, limit 5 s)",
               (unsigned long long)r.primes_checked, (unsigned long long)r.max_observed_gap,
               r.discrepancies.size(), dt));
}

// --- 5: twin equivalence --------------------------------------------------

void criterion_5() {
    auto t0 = clock_type::now();
    CampaignConfig cfg;
    cfg.kind = CampaignKind::twin;
    cfg.start_index = 3;
    cfg.count = 78496;  // primes 5 .. 999983
    CampaignReport r = run_campaign(cfg);
    double dt = seconds_since(t0);
    std::size_t below_1e4 = twin_pairs_upto(10000).size();
    bool ok = r.complete && r.primes_checked == 78496 && r.discrepancies.empty() &&
              r.twin_pairs_found == 8168 && r.twin_pairs_found == twin_pairs_upto(1000000).size() &&
              below_1e4 == 204 && dt < 30.0;
    report(5, ok,
           fmt("constraint verdict == oracle for every prime 5 <= p < 10^6: %zu mismatches, "
               "%llu twin pairs found; %zu pairs below 10^4 (%.1f s, limit 30 s)",
               r.discrepancies.size(), (unsigned long long)r.twin_pairs_found, below_1e4, dt));
}

// --- 6: algorithm/constraint coherence -----------------------------------

void criterion_6() {
    auto t0 = clock_type::now();
    std::vector<u64> pool;
    sieve_upto(10000).for_each_prime([&](u64 p) {
        if (p >= 7) pool.push_back(p);
    });
    std::mt19937_64 rng(0xacce9706ULL);
    u64 counterexamples = 0;
    u64 first_bad = 0;
    for (int i = 0; i < 100000; ++i) {
        u64 p = pool[rng() % pool.size()];
        FirstMissingEven fme = first_missing_even(build_slack_list(p));
        bool in_range_two = fme.e == 2 && !fme.used_beyond_range;
        bool no_violation = r_constraint_violations(p).empty();
        if (in_range_two != no_violation && counterexamples++ == 0) first_bad = p;
    }
    double dt = seconds_since(t0);
    report(6, counterexamples == 0,
           fmt("first-missing-even == 2 in range <=> no constraint violations, for 10^5 "
               "random primes 7 <= p < 10^4: %llu counterexamples%s (%.1f s)",
               (unsigned long long)counterexamples,
               counterexamples ? fmt(" (first at p=%llu)", (unsigned long long)first_bad).c_str()
                               : "",
               dt));
}

// --- 7: slack/remainder duality ------------------------------------------

void criterion_7() {
    auto t0 = clock_type::now();
    std::mt19937_64 rng(0xacce9707ULL);
    u64 bad = 0;
    for (int i = 0; i < 1000000; ++i) {
        u64 p = 2 + rng() % 1000000000000ULL;
        u64 d = 2 + rng() % 1000000ULL;
        u64 s = slack(p, d);
        u64 r = p % d;
        if ((p + s) % d != 0) ++bad;
        if (r != 0 && s + r != d) ++bad;
        if (r == 0 && s != d) ++bad;
    }
    double dt = seconds_since(t0);
    report(7, bad == 0,
           fmt("slack + remainder == d when d does not divide p, and (p + slack) %% d == 0, "
               "over 10^6 random pairs: %llu failures (%.2f s)",
               (unsigned long long)bad, dt));
}

// --- 8: translation envelope ---------------------------------------------

void criterion_8() {
    // The campaign engine compares every successor against p + (p-1)/2 + 1 and
    // records an eq5-bound discrepancy on violation, so a clean criterion-3 run
    // already certifies the envelope; this re-checks and reports the extremes.
    u64 env_violations = 0;
    for (const DiscrepancyRecord& d : campaign_base.discrepancies)
        if (d.claim_kind == "eq5-bound") ++env_violations;
    if (ran_full)
        for (const DiscrepancyRecord& d : campaign_full.discrepancies)
            if (d.claim_kind == "eq5-bound") ++env_violations;
    bool frozen_ok = campaign_base.beyond_range_uses == 2 && campaign_base.max_observed_e == 72;
    if (ran_full)
        frozen_ok = frozen_ok && campaign_full.beyond_range_uses == 2 &&
                    campaign_full.max_observed_e == 114;
    const CampaignReport& widest = ran_full ? campaign_full : campaign_base;
    report(8, env_violations == 0 && frozen_ok,
           fmt("E <= (p-1)/2 + 1 across criterion-3 campaigns: %llu envelope violations; "
               "max observed E = %llu, beyond-range fallbacks = %llu (only p = 5 and 7)",
               (unsigned long long)env_violations, (unsigned long long)widest.max_observed_e,
               (unsigned long long)widest.beyond_range_uses));
}

// --- 9: oracle self-consistency ------------------------------------------

void criterion_9() {
    auto t0 = clock_type::now();
    bool pi_ok = prime_count(1000000) == 78498;

    PrimeTable table(100000000);
    std::mt19937_64 rng(0xacce9709ULL);
    u64 interval_mismatches = 0, trial_mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        u64 lo = 2 + rng() % (100000000 - 10001);
        u64 hi = lo + 9999;
        std::vector<u64> seg = segmented_sieve(lo, hi);
        std::vector<u64> ref;
        for (u64 n = lo; n <= hi; ++n)
            if (table.is_prime(n)) ref.push_back(n);
        if (seg != ref) ++interval_mismatches;
        // trial division, sampled: every 17th number plus every prime found
        for (u64 n = lo; n <= hi; n += 17)
            if (is_prime_trial(n) != table.is_prime(n)) ++trial_mismatches;
        for (std::size_t k = 0; k < seg.size(); k += 8)
            if (!is_prime_trial(seg[k])) ++trial_mismatches;
    }

    auto sweep0 = clock_type::now();
    u64 swept = 0;
    segmented_for_each(2, 100000000, [&](u64) { ++swept; });
    double sweep_dt = seconds_since(sweep0);
    bool sweep_ok = swept == 5761455 && swept == table.count() && sweep_dt < 60.0;

    double dt = seconds_since(t0);
    report(9, pi_ok && interval_mismatches == 0 && trial_mismatches == 0 && sweep_ok,
           fmt("pi(10^6) = 78498; bitmap/segmented/trial agree on 10^3 random width-10^4 "
               "intervals below 10^8 (%llu+%llu mismatches); full segmented sweep to 10^8 "
               "counts %llu in %.2f s (limit 60 s) (total %.1f s)",
               (unsigned long long)interval_mismatches, (unsigned long long)trial_mismatches,
               (unsigned long long)swept, sweep_dt, dt));
}

// --- 10: complexity evidence ---------------------------------------------

void criterion_10() {
    CampaignConfig cfg;
    cfg.kind = CampaignKind::bench;
    CampaignReport r = run_campaign(cfg);
    bool shape_ok = r.bench_rows.size() == 4;
    double ratio = 0.0, sieve_ratio = 0.0;
    if (shape_ok) {
        ratio = r.bench_rows[2].slack_ns_per_prime / r.bench_rows[1].slack_ns_per_prime;
        sieve_ratio = r.bench_rows[3].sieve_ns_per_prime / r.bench_rows[1].sieve_ns_per_prime;
    }
    bool ok = shape_ok && ratio >= 5.0 && ratio <= 15.0 && sieve_ratio < 5.0;
    std::printf("      scale   sample_prime   slack_ns_per_prime   sieve_ns_per_prime\n");
    for (const BenchRow& row : r.bench_rows)
        std::printf("    %7llu   %12llu   %18.1f   %18.2f\n", (unsigned long long)row.scale,
                    (unsigned long long)row.sample_prime, row.slack_ns_per_prime,
                    row.sieve_ns_per_prime);
    report(10, ok,
           fmt("per-prime slack cost at 10^5 is %.1fx the cost at 10^4 (needs 10x +- 50%%); "
               "sieve per-prime cost grows %.2fx over 10^4 -> 10^6 (sub-linear)",
               ratio, sieve_ratio));
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) full = true;

    std::printf("acceptance%s\n", full ? " (--full)" : "");
    criterion_1();
    criterion_2();
    criterion_3(full);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
