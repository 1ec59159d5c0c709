#include "slackprime/verify_harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include <json.hpp>

#include "slackprime/gap_analysis.hpp"
#include "slackprime/oracle.hpp"
#include "slackprime/twin_constraints.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace slackprime {

std::string to_string(CampaignKind kind) {
    switch (kind) {
        case CampaignKind::next_prime: return "next-prime";
        case CampaignKind::gap_bound: return "gap-bound";
        case CampaignKind::twin: return "twin";
        case CampaignKind::bench: return "bench";
    }
    throw InputError("to_string: unknown campaign kind");
}

CampaignKind campaign_kind_from_string(const std::string& name) {
    if (name == "next-prime") return CampaignKind::next_prime;
    if (name == "gap-bound") return CampaignKind::gap_bound;
    if (name == "twin") return CampaignKind::twin;
    if (name == "bench") return CampaignKind::bench;
    throw InputError("unknown campaign kind '" + name +
                     "' (expected next-prime, gap-bound, twin, or bench)");
}

namespace {

using steady_clock = std::chrono::steady_clock;

double seconds_since(steady_clock::time_point t0) {
    return std::chrono::duration<double>(steady_clock::now() - t0).count();
}

void validate_config(const CampaignConfig& cfg) {
    u64 min_start = cfg.kind == CampaignKind::gap_bound ? 1 : 3;
    if (cfg.start_index < min_start)
        throw InputError("campaign: start_index must be >= " + std::to_string(min_start) +
                         " for kind " + to_string(cfg.kind));
    if (cfg.count < 1) throw InputError("campaign: count must be >= 1");
    if (cfg.worker_count < 1) throw InputError("campaign: worker_count must be >= 1");
    if (cfg.checkpoint_every < 1) throw InputError("campaign: checkpoint_every must be >= 1");
    if (cfg.chain && cfg.kind != CampaignKind::next_prime)
        throw InputError("campaign: chain mode applies to next-prime campaigns only");
    if (cfg.chain && cfg.worker_count > 1)
        throw InputError("campaign: chain mode is sequential; use --workers 1");
    if (cfg.resume && cfg.output_path.empty())
        throw InputError("campaign: resume requires an output path");
}

// Primes P_i for i in [start_index, start_index + count], one past the
// checked range so every checked index has its oracle successor at hand.
std::vector<u64> primes_for(u64 start_index, u64 count) {
    u64 top_index = checked_add(start_index, count);
    PrimeTable table(nth_prime_bound(top_index));
    std::vector<u64> primes;
    primes.reserve(static_cast<std::size_t>(count) + 1);
    u64 seen = 0;
    table.for_each_prime([&](u64 p) {
        ++seen;
        if (seen >= start_index && seen <= top_index) primes.push_back(p);
    });
    if (primes.size() != count + 1)
        throw CapacityError("campaign: oracle prime supply fell short of index " +
                            std::to_string(top_index));
    return primes;
}

ordered_json config_json(const CampaignConfig& cfg) {
    ordered_json j;
    j["kind"] = to_string(cfg.kind);
    j["start_index"] = cfg.start_index;
    j["count"] = cfg.count;
    j["worker_count"] = cfg.worker_count;
    j["checkpoint_every"] = cfg.checkpoint_every;
    j["output_path"] = cfg.output_path;
    j["chain"] = cfg.chain;
    j["fast"] = cfg.fast;
    return j;
}

ordered_json discrepancy_json(const DiscrepancyRecord& d) {
    ordered_json j;
    j["index"] = d.index;
    j["p"] = d.p;
    j["claim_kind"] = d.claim_kind;
    j["claimed"] = d.claimed;
    j["oracle"] = d.oracle;
    return j;
}

DiscrepancyRecord discrepancy_from_json(const ordered_json& j) {
    DiscrepancyRecord d;
    d.index = j.at("index").get<u64>();
    d.p = j.at("p").get<u64>();
    d.claim_kind = j.at("claim_kind").get<std::string>();
    d.claimed = j.at("claimed").get<u64>();
    d.oracle = j.at("oracle").get<u64>();
    return d;
}

std::string hex16(u64 v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string crc_line_for(const std::string& data_line) {
    return "{\"crc\":\"" + hex16(fnv1a64(data_line)) + "\"}";
}

// Results of one contiguous index block, merged strictly in block order.
struct BlockResult {
    u64 block = 0;
    u64 first_index = 0;
    u64 checked = 0;
    u64 beyond = 0;
    u64 max_gap = 0;
    u64 max_e = 0;
    u64 twins = 0;
    double merit_sum = 0.0;
    std::vector<DiscrepancyRecord> discrepancies;
    std::vector<GapRecord> gap_rows;        // gap-bound kind
    std::vector<EstimateSet> est_rows;      // gap-bound kind
    std::vector<std::pair<u64, u64>> twin_rows;  // twin kind
};

// Running totals over committed blocks; also the state recovered on resume.
struct Totals {
    u64 checked = 0;
    u64 beyond = 0;
    u64 max_gap = 0;
    u64 max_e = 0;
    u64 twins = 0;
    double merit_sum = 0.0;
    std::vector<DiscrepancyRecord> discrepancies;

    void merge(const BlockResult& r) {
        checked += r.checked;
        beyond += r.beyond;
        max_gap = std::max(max_gap, r.max_gap);
        max_e = std::max(max_e, r.max_e);
        twins += r.twins;
        merit_sum += r.merit_sum;
        discrepancies.insert(discrepancies.end(), r.discrepancies.begin(),
                             r.discrepancies.end());
    }
};

struct Paths {
    bool enabled = false;
    bool has_csv = false;
    std::string checkpoint;
    std::string report;
    std::string discrepancies;
    std::string csv;
};

Paths make_paths(const CampaignConfig& cfg) {
    Paths p;
    if (cfg.output_path.empty()) return p;
    p.enabled = true;
    fs::path root(cfg.output_path);
    p.checkpoint = (root / "checkpoint.jsonl").string();
    p.report = (root / "report.json").string();
    p.discrepancies = (root / "discrepancies.jsonl").string();
    if (cfg.kind == CampaignKind::gap_bound) {
        p.csv = (root / "gaps.csv").string();
        p.has_csv = true;
    } else if (cfg.kind == CampaignKind::twin) {
        p.csv = (root / "twins.csv").string();
        p.has_csv = true;
    }
    return p;
}

ordered_json checkpoint_header(const CampaignConfig& cfg) {
    ordered_json j;
    j["v"] = 1;
    j["kind"] = to_string(cfg.kind);
    j["start_index"] = cfg.start_index;
    j["count"] = cfg.count;
    j["checkpoint_every"] = cfg.checkpoint_every;
    j["chain"] = cfg.chain;
    j["fast"] = cfg.fast;
    return j;
}

struct CheckpointState {
    bool exists = false;
    u64 blocks_done = 0;
    u64 csv_offset = 0;  // meaningful when blocks_done > 0
    Totals totals;
    // The accepted lines verbatim (data/checksum alternating, header first);
    // resume rewrites the file from these so a torn tail never lingers.
    std::vector<std::string> valid_lines;
};

ordered_json parse_json_line(const std::string& line, bool* ok) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    *ok = !j.is_discarded();
    return j;
}

// Reads and validates checkpoint.jsonl: alternating data/checksum lines, a
// config header first, then sequentially numbered block records. A lone or
// torn final line (a crash tail) is dropped; corruption anywhere else is a
// CheckpointError.
CheckpointState load_checkpoint(const CampaignConfig& cfg, const std::string& path) {
    CheckpointState state;
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) return state;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    if (lines.empty()) return state;

    std::vector<ordered_json> records;
    std::vector<std::string> accepted;
    for (std::size_t k = 0; k < lines.size(); k += 2) {
        bool last_pair = k + 2 >= lines.size();
        if (k + 1 >= lines.size()) break;  // data line without its checksum: dropped tail
        bool data_ok = false;
        ordered_json data = parse_json_line(lines[k], &data_ok);
        bool crc_ok = false;
        ordered_json crc = parse_json_line(lines[k + 1], &crc_ok);
        crc_ok = crc_ok && crc.is_object() && crc.contains("crc") && crc["crc"].is_string();
        if (!data_ok || !crc_ok) {
            if (last_pair) break;  // torn tail: dropped
            throw CheckpointError("checkpoint: malformed record in " + path);
        }
        if (crc["crc"].get<std::string>() != hex16(fnv1a64(lines[k])))
            throw CheckpointError("checkpoint: checksum mismatch in " + path);
        records.push_back(std::move(data));
        accepted.push_back(lines[k]);
        accepted.push_back(lines[k + 1]);
    }
    if (records.empty()) return state;

    const ordered_json& header = records.front();
    ordered_json expected = checkpoint_header(cfg);
    if (header != expected)
        throw CheckpointError("checkpoint: header does not match the campaign configuration");

    state.exists = true;
    state.valid_lines = std::move(accepted);
    for (std::size_t k = 1; k < records.size(); ++k) {
        const ordered_json& b = records[k];
        if (!b.contains("block") || b["block"].get<u64>() != k - 1)
            throw CheckpointError("checkpoint: block records out of order");
        BlockResult r;
        r.checked = b.at("checked").get<u64>();
        r.beyond = b.at("beyond").get<u64>();
        r.max_gap = b.at("max_gap").get<u64>();
        r.max_e = b.at("max_e").get<u64>();
        r.twins = b.at("twins").get<u64>();
        r.merit_sum = b.at("merit_sum").get<double>();
        for (const auto& dj : b.at("disc")) r.discrepancies.push_back(discrepancy_from_json(dj));
        state.totals.merge(r);
        state.csv_offset = b.at("csv_offset").get<u64>();
        state.blocks_done = k;
    }
    return state;
}

ordered_json block_json(const BlockResult& r, u64 csv_offset) {
    ordered_json j;
    j["block"] = r.block;
    j["first_index"] = r.first_index;
    j["checked"] = r.checked;
    j["beyond"] = r.beyond;
    j["max_gap"] = r.max_gap;
    j["max_e"] = r.max_e;
    j["twins"] = r.twins;
    j["merit_sum"] = r.merit_sum;
    ordered_json disc = ordered_json::array();
    for (const auto& d : r.discrepancies) disc.push_back(discrepancy_json(d));
    j["disc"] = std::move(disc);
    j["csv_offset"] = csv_offset;
    return j;
}

void write_line_checked(std::ofstream& out, const std::string& data_line) {
    out << data_line << '\n' << crc_line_for(data_line) << '\n';
    out.flush();
}

CampaignReport finish_report(const CampaignConfig& cfg, const Totals& totals, bool complete,
                             double wall_seconds, std::vector<WorkerStat> workers,
                             const Paths& paths) {
    CampaignReport report;
    report.config = cfg;
    report.config.resume = false;                // echo is input-independent of the split
    report.config.interrupt_after_blocks = 0;    // test hook, never echoed
    report.complete = complete;
    report.primes_checked = totals.checked;
    report.discrepancies = totals.discrepancies;
    report.beyond_range_uses = totals.beyond;
    report.max_observed_gap = totals.max_gap;
    report.max_observed_e = totals.max_e;
    report.twin_pairs_found = totals.twins;
    if (cfg.kind == CampaignKind::gap_bound && totals.checked > 0)
        report.avg_merit = totals.merit_sum / static_cast<double>(totals.checked);
    report.wall_time_seconds = wall_seconds;
    report.workers = std::move(workers);

    if (paths.enabled) {
        {
            std::ofstream disc_out(paths.discrepancies, std::ios::binary | std::ios::trunc);
            if (!disc_out.is_open())
                throw CapacityError("campaign: cannot write " + paths.discrepancies);
            for (const auto& d : report.discrepancies)
                disc_out << discrepancy_json(d).dump() << '\n';
        }
        std::ofstream report_out(paths.report, std::ios::binary | std::ios::trunc);
        if (!report_out.is_open()) throw CapacityError("campaign: cannot write " + paths.report);
        report_out << report.to_json() << '\n';
    }
    return report;
}

// The shared block engine: workers compute disjoint index blocks, a single
// writer commits them in ascending block order so checkpoint bytes, CSV
// bytes, and aggregate arithmetic are identical for every worker count.
CampaignReport run_engine(const CampaignConfig& cfg,
                          const std::function<BlockResult(u64 block, std::vector<bool>& ws)>&
                              process_block) {
    auto t0 = steady_clock::now();
    Paths paths = make_paths(cfg);
    u64 n_blocks = (cfg.count + cfg.checkpoint_every - 1) / cfg.checkpoint_every;

    CheckpointState ckpt;
    if (paths.enabled) {
        fs::create_directories(cfg.output_path);
        if (cfg.resume) {
            ckpt = load_checkpoint(cfg, paths.checkpoint);
            if (!ckpt.exists)
                throw CheckpointError("checkpoint: nothing to resume at " + paths.checkpoint);
        }
    }

    std::ofstream ckpt_out;
    std::ofstream csv_out;
    if (paths.enabled) {
        if (ckpt.exists) {
            // Rewrite the checkpoint from the accepted lines (dropping any
            // torn tail) and cut the CSV back to the last committed block.
            {
                std::ofstream rewrite(paths.checkpoint, std::ios::binary | std::ios::trunc);
                if (!rewrite.is_open())
                    throw CapacityError("campaign: cannot write " + paths.checkpoint);
                for (const std::string& l : ckpt.valid_lines) rewrite << l << '\n';
            }
            if (paths.has_csv && ckpt.blocks_done > 0) {
                if (!fs::exists(paths.csv))
                    throw CheckpointError("checkpoint: " + paths.csv +
                                          " is missing but blocks were committed");
                fs::resize_file(paths.csv, ckpt.csv_offset);
            }
        } else {
            std::ofstream fresh(paths.checkpoint, std::ios::binary | std::ios::trunc);
            if (!fresh.is_open())
                throw CapacityError("campaign: cannot write " + paths.checkpoint);
            write_line_checked(fresh, checkpoint_header(cfg).dump());
        }
        ckpt_out.open(paths.checkpoint, std::ios::binary | std::ios::app);
        if (!ckpt_out.is_open()) throw CapacityError("campaign: cannot write " + paths.checkpoint);
        if (paths.has_csv) {
            if (!ckpt.exists || ckpt.blocks_done == 0) {
                std::ofstream fresh(paths.csv, std::ios::binary | std::ios::trunc);
                if (!fresh.is_open()) throw CapacityError("campaign: cannot write " + paths.csv);
                fresh << (cfg.kind == CampaignKind::gap_bound ? gaps_csv_header()
                                                             : twins_csv_header())
                      << '\n';
            }
            csv_out.open(paths.csv, std::ios::binary | std::ios::app);
            if (!csv_out.is_open()) throw CapacityError("campaign: cannot write " + paths.csv);
        }
    }

    Totals totals = ckpt.totals;
    u64 first_block = ckpt.blocks_done;
    u64 running_best_gap = totals.max_gap;  // prefix max for is_maximal assignment

    if (first_block >= n_blocks) {
        // Everything was already committed: a resume over a finished campaign
        // reproduces the final report without re-running anything.
        return finish_report(cfg, totals, true, seconds_since(t0), {}, paths);
    }

    u32 worker_count = cfg.worker_count;
    std::mutex mu;
    std::condition_variable cv;
    std::map<u64, BlockResult> ready;
    bool failed = false;
    std::exception_ptr first_error;
    std::atomic<bool> stop{false};
    std::vector<WorkerStat> wstats(worker_count);

    auto worker = [&](u32 w) {
        std::vector<bool> workspace;
        auto w0 = steady_clock::now();
        u64 my_primes = 0;
        try {
            for (u64 b = first_block + w; b < n_blocks; b += worker_count) {
                if (stop.load(std::memory_order_relaxed)) break;
                BlockResult r = process_block(b, workspace);
                my_primes += r.checked;
                {
                    std::lock_guard<std::mutex> lk(mu);
                    ready.emplace(b, std::move(r));
                }
                cv.notify_all();
            }
        } catch (...) {
            {
                std::lock_guard<std::mutex> lk(mu);
                if (!failed) {
                    failed = true;
                    first_error = std::current_exception();
                }
            }
            stop.store(true);
            cv.notify_all();
        }
        wstats[w] = WorkerStat{w, my_primes, seconds_since(w0)};
    };

    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (u32 w = 0; w < worker_count; ++w) pool.emplace_back(worker, w);

    bool interrupted = false;
    u64 committed_this_run = 0;
    for (u64 b = first_block; b < n_blocks; ++b) {
        BlockResult r;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return failed || ready.count(b) > 0; });
            if (failed) break;
            auto it = ready.find(b);
            r = std::move(it->second);
            ready.erase(it);
        }

        u64 csv_offset = 0;
        if (paths.has_csv && csv_out.is_open()) {
            if (cfg.kind == CampaignKind::gap_bound) {
                for (std::size_t k = 0; k < r.gap_rows.size(); ++k) {
                    GapRecord& rec = r.gap_rows[k];
                    rec.is_maximal = rec.gap > running_best_gap;
                    running_best_gap = std::max(running_best_gap, rec.gap);
                    csv_out << gaps_csv_row(rec, r.est_rows[k]) << '\n';
                }
            } else {
                for (const auto& [p, q] : r.twin_rows) csv_out << p << ',' << q << '\n';
            }
            csv_out.flush();
            csv_offset = static_cast<u64>(csv_out.tellp());
        } else if (cfg.kind == CampaignKind::gap_bound) {
            for (GapRecord& rec : r.gap_rows) {
                rec.is_maximal = rec.gap > running_best_gap;
                running_best_gap = std::max(running_best_gap, rec.gap);
            }
        }

        if (paths.enabled) write_line_checked(ckpt_out, block_json(r, csv_offset).dump());
        totals.merge(r);
        ++committed_this_run;

        if (cfg.interrupt_after_blocks > 0 && committed_this_run >= cfg.interrupt_after_blocks &&
            b + 1 < n_blocks) {
            interrupted = true;
            stop.store(true);
            cv.notify_all();
            break;
        }
    }

    for (auto& t : pool) t.join();
    if (failed) std::rethrow_exception(first_error);

    return finish_report(cfg, totals, !interrupted, seconds_since(t0), std::move(wstats), paths);
}

NextPrimeMethod default_next_prime_method(bool fast) {
    if (fast)
        return [](u64 p, std::vector<bool>& ws) { return next_prime_slack_fast(p, ws); };
    return [](u64 p, std::vector<bool>&) { return next_prime_slack(p); };
}

CampaignReport run_next_prime_impl(const CampaignConfig& cfg, const NextPrimeMethod& method) {
    validate_config(cfg);
    std::vector<u64> primes = primes_for(cfg.start_index, cfg.count);
    u64 start = cfg.start_index;
    u64 count = cfg.count;
    u64 every = cfg.checkpoint_every;
    bool chain = cfg.chain;

    auto process_block = [&, start, count, every, chain](u64 b, std::vector<bool>& ws) {
        BlockResult r;
        r.block = b;
        r.first_index = start + b * every;
        u64 n = std::min(every, count - b * every);
        // In chain mode the method input is the previous step's output; the
        // comparison below re-anchors to the oracle after every index, so a
        // block always begins at the oracle prime and evidence stays per-index.
        u64 cur = primes[r.first_index - start];
        for (u64 k = 0; k < n; ++k) {
            u64 i = r.first_index + k;
            u64 p = primes[i - start];
            u64 oracle_next = primes[i - start + 1];
            NextPrimeResult res = method(chain ? cur : p, ws);
            if (res.successor != oracle_next)
                r.discrepancies.push_back(
                    DiscrepancyRecord{i, p, "next-prime", res.successor, oracle_next});
            u64 bound = successor_upper_bound(p);
            if (res.successor > bound)
                r.discrepancies.push_back(
                    DiscrepancyRecord{i, p, "eq5-bound", res.successor, bound});
            r.beyond += res.used_beyond_range ? 1 : 0;
            r.max_e = std::max(r.max_e, res.e);
            r.max_gap = std::max(r.max_gap, oracle_next - p);
            ++r.checked;
            cur = oracle_next;  // re-anchor (equals res.successor whenever they agree)
        }
        return r;
    };
    return run_engine(cfg, process_block);
}

CampaignReport run_twin_impl(const CampaignConfig& cfg, const TwinMethod& method) {
    validate_config(cfg);
    std::vector<u64> primes = primes_for(cfg.start_index, cfg.count);
    u64 start = cfg.start_index;
    u64 count = cfg.count;
    u64 every = cfg.checkpoint_every;

    auto process_block = [&, start, count, every](u64 b, std::vector<bool>&) {
        BlockResult r;
        r.block = b;
        r.first_index = start + b * every;
        u64 n = std::min(every, count - b * every);
        for (u64 k = 0; k < n; ++k) {
            u64 i = r.first_index + k;
            u64 p = primes[i - start];
            u64 oracle_next = primes[i - start + 1];
            bool verdict = method(p);
            bool oracle_twin = oracle_next == p + 2;
            if (verdict != oracle_twin)
                r.discrepancies.push_back(DiscrepancyRecord{i, p, "twin-verdict",
                                                            verdict ? u64{1} : u64{0},
                                                            oracle_twin ? u64{1} : u64{0}});
            if (verdict) {
                ++r.twins;
                r.twin_rows.emplace_back(p, p + 2);
            }
            r.max_gap = std::max(r.max_gap, oracle_next - p);
            ++r.checked;
        }
        return r;
    };
    return run_engine(cfg, process_block);
}

}  // namespace

CampaignReport run_next_prime_campaign(const CampaignConfig& cfg) {
    if (cfg.kind != CampaignKind::next_prime)
        throw InputError("run_next_prime_campaign: config kind must be next-prime");
    return run_next_prime_impl(cfg, default_next_prime_method(cfg.fast));
}

CampaignReport run_next_prime_campaign_with(const CampaignConfig& cfg,
                                            const NextPrimeMethod& method) {
    if (cfg.kind != CampaignKind::next_prime)
        throw InputError("run_next_prime_campaign_with: config kind must be next-prime");
    return run_next_prime_impl(cfg, method);
}

CampaignReport run_gap_bound_campaign(const CampaignConfig& cfg) {
    if (cfg.kind != CampaignKind::gap_bound)
        throw InputError("run_gap_bound_campaign: config kind must be gap-bound");
    validate_config(cfg);
    std::vector<u64> primes = primes_for(cfg.start_index, cfg.count);
    u64 start = cfg.start_index;
    u64 count = cfg.count;
    u64 every = cfg.checkpoint_every;

    auto process_block = [&, start, count, every](u64 b, std::vector<bool>&) {
        BlockResult r;
        r.block = b;
        r.first_index = start + b * every;
        u64 n = std::min(every, count - b * every);
        r.gap_rows.reserve(n);
        r.est_rows.reserve(n);
        for (u64 k = 0; k < n; ++k) {
            u64 i = r.first_index + k;
            u64 p = primes[i - start];
            u64 p_next = primes[i - start + 1];
            GapRecord rec = gap_record(i, p, p_next);
            if (!rec.within_paper_bound)
                r.discrepancies.push_back(
                    DiscrepancyRecord{i, p, "gap-bound", rec.bound_paper, rec.gap});
            r.merit_sum += rec.merit;
            r.max_gap = std::max(r.max_gap, rec.gap);
            ++r.checked;
            r.est_rows.push_back(estimates(p, i));  // pi(P_i) = i by construction
            r.gap_rows.push_back(rec);
        }
        return r;
    };
    return run_engine(cfg, process_block);
}

CampaignReport run_twin_campaign(const CampaignConfig& cfg) {
    if (cfg.kind != CampaignKind::twin)
        throw InputError("run_twin_campaign: config kind must be twin");
    return run_twin_impl(cfg, [](u64 p) { return twin_leader_verdict(p); });
}

CampaignReport run_twin_campaign_with(const CampaignConfig& cfg, const TwinMethod& method) {
    if (cfg.kind != CampaignKind::twin)
        throw InputError("run_twin_campaign_with: config kind must be twin");
    return run_twin_impl(cfg, method);
}

CampaignReport run_bench(const CampaignConfig& cfg) {
    if (cfg.kind != CampaignKind::bench)
        throw InputError("run_bench: config kind must be bench");
    auto t0 = steady_clock::now();
    Paths paths = make_paths(cfg);
    if (paths.enabled) fs::create_directories(cfg.output_path);

    constexpr double kMinSeconds = 0.05;
    const u64 scales[] = {1000, 10000, 100000, 1000000};

    CampaignReport report;
    report.config = cfg;
    report.config.resume = false;
    report.config.interrupt_after_blocks = 0;
    volatile u64 sink = 0;  // keeps the timed calls observable

    for (u64 scale : scales) {
        BenchRow row;
        row.scale = scale;

        // Amortized sieve cost: rebuild the table until enough time accrues.
        u64 pi_scale = 0;
        {
            u64 reps = 0;
            auto s0 = steady_clock::now();
            do {
                PrimeTable table(scale);
                pi_scale = table.count();
                sink = sink + pi_scale;
                ++reps;
            } while (seconds_since(s0) < kMinSeconds);
            row.sieve_ns_per_prime =
                seconds_since(s0) * 1e9 / (static_cast<double>(reps) * pi_scale);
        }

        // Per-prime slack-method cost over a fixed sample just above scale.
        std::vector<u64> sample;
        segmented_for_each(scale, scale + 1000, [&](u64 p) {
            if (sample.size() < 8) sample.push_back(p);
        });
        if (sample.empty()) throw CapacityError("bench: no sample primes found");
        row.sample_prime = sample.front();
        {
            std::vector<bool> ws;
            u64 reps = 0;
            auto s0 = steady_clock::now();
            do {
                for (u64 p : sample) sink = sink + next_prime_slack_fast(p, ws).successor;
                ++reps;
            } while (seconds_since(s0) < kMinSeconds);
            row.slack_ns_per_prime =
                seconds_since(s0) * 1e9 / (static_cast<double>(reps) * sample.size());
        }
        report.bench_rows.push_back(row);
    }

    report.complete = true;
    report.wall_time_seconds = seconds_since(t0);
    if (paths.enabled) {
        std::ofstream report_out(paths.report, std::ios::binary | std::ios::trunc);
        if (!report_out.is_open()) throw CapacityError("campaign: cannot write " + paths.report);
        report_out << report.to_json() << '\n';
    }
    return report;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    switch (cfg.kind) {
        case CampaignKind::next_prime: return run_next_prime_campaign(cfg);
        case CampaignKind::gap_bound: return run_gap_bound_campaign(cfg);
        case CampaignKind::twin: return run_twin_campaign(cfg);
        case CampaignKind::bench: return run_bench(cfg);
    }
    throw InputError("run_campaign: unknown campaign kind");
}

std::string CampaignReport::to_json() const {
    ordered_json j;
    j["config"] = config_json(config);
    j["complete"] = complete;
    j["primes_checked"] = primes_checked;
    j["discrepancy_count"] = discrepancies.size();
    ordered_json disc = ordered_json::array();
    for (const auto& d : discrepancies) disc.push_back(discrepancy_json(d));
    j["discrepancies"] = std::move(disc);
    j["beyond_range_uses"] = beyond_range_uses;
    j["max_observed_gap"] = max_observed_gap;
    j["max_observed_e"] = max_observed_e;
    if (config.kind == CampaignKind::twin) j["twin_pairs_found"] = twin_pairs_found;
    if (config.kind == CampaignKind::gap_bound) j["avg_merit"] = avg_merit;
    if (config.kind == CampaignKind::bench) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : bench_rows) {
            ordered_json rj;
            rj["scale"] = row.scale;
            rj["sample_prime"] = row.sample_prime;
            rj["slack_ns_per_prime"] = row.slack_ns_per_prime;
            rj["sieve_ns_per_prime"] = row.sieve_ns_per_prime;
            rows.push_back(std::move(rj));
        }
        j["bench"] = std::move(rows);
    }
    j["wall_time_seconds"] = wall_time_seconds;
    ordered_json ws = ordered_json::array();
    for (const auto& w : workers) {
        ordered_json wj;
        wj["id"] = w.id;
        wj["primes"] = w.primes;
        wj["seconds"] = w.seconds;
        ws.push_back(std::move(wj));
    }
    j["workers"] = std::move(ws);
    return j.dump(2);
}

}  // namespace slackprime
