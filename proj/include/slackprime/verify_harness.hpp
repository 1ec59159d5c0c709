#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slackprime/common.hpp"
#include "slackprime/next_prime.hpp"

namespace slackprime {

enum class CampaignKind { next_prime, gap_bound, twin, bench };

// Wire names: "next-prime", "gap-bound", "twin", "bench".
std::string to_string(CampaignKind kind);
CampaignKind campaign_kind_from_string(const std::string& name);

struct CampaignConfig {
    CampaignKind kind = CampaignKind::next_prime;
    u64 start_index = 3;   // 1-based prime index; the method's seed boundary is index 3
    u64 count = 1;         // primes to check
    u32 worker_count = 1;
    u64 checkpoint_every = 4096;  // primes per checkpoint block
    std::string output_path;      // artifact directory; empty keeps everything in memory
    bool chain = false;   // feed each successor into the next step (single worker)
    bool fast = false;    // use the list-free method variant
    bool resume = false;  // pick up from an existing checkpoint in output_path

    // Test hook: stop after this many committed blocks when nonzero, leaving
    // a valid checkpoint behind. Never echoed into reports or checkpoints.
    u64 interrupt_after_blocks = 0;
};

// One adjudicated mismatch. claimed is the method's value, oracle the ground
// truth: successor vs true next prime (next-prime), successor vs its ceiling
// (eq5-bound), bound vs observed gap (gap-bound), verdict vs companion
// primality as 0/1 (twin-verdict).
struct DiscrepancyRecord {
    u64 index;
    u64 p;
    std::string claim_kind;  // next-prime | eq5-bound | gap-bound | twin-verdict
    u64 claimed;
    u64 oracle;

    bool operator==(const DiscrepancyRecord&) const = default;
};

struct WorkerStat {
    u32 id;
    u64 primes;
    double seconds;
};

struct BenchRow {
    u64 scale;
    u64 sample_prime;
    double slack_ns_per_prime;
    double sieve_ns_per_prime;  // sieve build time amortized over primes found
};

struct CampaignReport {
    CampaignConfig config;
    bool complete = false;
    u64 primes_checked = 0;
    std::vector<DiscrepancyRecord> discrepancies;
    u64 beyond_range_uses = 0;
    u64 max_observed_gap = 0;
    u64 max_observed_e = 0;
    u64 twin_pairs_found = 0;  // twin campaigns only
    double avg_merit = 0.0;    // gap-bound campaigns only
    std::vector<BenchRow> bench_rows;  // bench campaigns only
    double wall_time_seconds = 0.0;
    std::vector<WorkerStat> workers;

    // report.json body. Everything except wall_time_seconds and workers is
    // identical across worker counts and across interrupt/resume splits.
    std::string to_json() const;
};

// Method seams: campaigns adjudicate whatever method they are handed, so
// tests can verify that a wrong method is caught and recorded.
using NextPrimeMethod = std::function<NextPrimeResult(u64 p, std::vector<bool>& workspace)>;
using TwinMethod = std::function<bool(u64 p)>;

CampaignReport run_next_prime_campaign(const CampaignConfig& cfg);
CampaignReport run_next_prime_campaign_with(const CampaignConfig& cfg,
                                            const NextPrimeMethod& method);
CampaignReport run_gap_bound_campaign(const CampaignConfig& cfg);
CampaignReport run_twin_campaign(const CampaignConfig& cfg);
CampaignReport run_twin_campaign_with(const CampaignConfig& cfg, const TwinMethod& method);
CampaignReport run_bench(const CampaignConfig& cfg);

// Dispatch on cfg.kind.
CampaignReport run_campaign(const CampaignConfig& cfg);

}  // namespace slackprime
