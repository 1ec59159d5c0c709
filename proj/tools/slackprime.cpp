// slackprime — command-line front end for the slack-arithmetic prime library.
//
// Subcommands: next, slacks, twins, gaps, estimate, verify, bench.
// Shared flags: --format {text|json|csv}, --out <path>.
// Exit codes: 0 success, 2 usage error, 3 input-validation error,
//             4 capacity error, 5 campaign discrepancies found.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slackprime/common.hpp"
#include "slackprime/core_slack.hpp"
#include "slackprime/gap_analysis.hpp"
#include "slackprime/next_prime.hpp"
#include "slackprime/oracle.hpp"
#include "slackprime/twin_constraints.hpp"
#include "slackprime/verify_harness.hpp"

namespace {

using nlohmann::ordered_json;
using namespace slackprime;

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    return Format::csv;
}

void require_prime(const char* cmd, u64 p) {
    if (!is_prime_trial(p))
        throw InputError(std::string(cmd) + ": " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------- next ----

int cmd_next(std::ostream& os, Format fmt, u64 p, u64 count) {
    if (count < 1) throw InputError("next: --count must be at least 1");
    require_prime("next", p);
    std::vector<NextPrimeResult> steps;
    steps.reserve(static_cast<std::size_t>(count));
    u64 cur = p;
    for (u64 k = 0; k < count; ++k) {
        NextPrimeResult r = next_prime_slack(cur);
        steps.push_back(r);
        cur = r.successor;
    }
    switch (fmt) {
        case Format::json: {
            auto to_obj = [](const NextPrimeResult& r) {
                ordered_json o;
                o["p"] = r.p;
                o["e"] = r.e;
                o["successor"] = r.successor;
                o["used_beyond_range"] = r.used_beyond_range;
                return o;
            };
            if (count == 1) {
                os << to_obj(steps.front()).dump() << "\n";
            } else {
                ordered_json arr = ordered_json::array();
                for (const auto& r : steps) arr.push_back(to_obj(r));
                os << arr.dump() << "\n";
            }
            break;
        }
        case Format::csv:
            os << "p,e,successor,used_beyond_range\n";
            for (const auto& r : steps)
                os << r.p << ',' << r.e << ',' << r.successor << ','
                   << (r.used_beyond_range ? 1 : 0) << "\n";
            break;
        case Format::text:
            for (const auto& r : steps) {
                os << r.p << " -> " << r.successor << "  (E = " << r.e;
                if (r.used_beyond_range) os << ", beyond search range";
                os << ")\n";
            }
            break;
    }
    return 0;
}

// -------------------------------------------------------------- slacks ----

int cmd_slacks(std::ostream& os, Format fmt, u64 p) {
    require_prime("slacks", p);
    SlackList list = build_slack_list(p);
    DivisorRange range = divisor_range(p);
    switch (fmt) {
        case Format::json: {
            ordered_json o;
            o["p"] = list.p;
            o["divisor_lo"] = range.lo;
            o["divisor_hi"] = range.hi;
            ordered_json entries = ordered_json::array();
            for (const auto& [d, s] : list.entries) {
                ordered_json e;
                e["d"] = d;
                e["s"] = s;
                entries.push_back(e);
            }
            o["entries"] = entries;
            os << o.dump() << "\n";
            break;
        }
        case Format::csv:
            os << "d,s\n";
            for (const auto& [d, s] : list.entries) os << d << ',' << s << "\n";
            break;
        case Format::text:
            os << "slack list for " << list.p << "  (divisors " << range.lo << ".." << range.hi
               << ")\n";
            os << std::setw(6) << "d" << std::setw(6) << "s" << "\n";
            for (const auto& [d, s] : list.entries)
                os << std::setw(6) << d << std::setw(6) << s << "\n";
            break;
    }
    return 0;
}

// --------------------------------------------------------------- twins ----

int cmd_twins_upto(std::ostream& os, Format fmt, u64 upto, bool include_3_5) {
    auto pairs = twin_pairs_upto(upto, include_3_5);
    switch (fmt) {
        case Format::json: {
            ordered_json o;
            o["upto"] = upto;
            o["include_3_5"] = include_3_5;
            o["count"] = pairs.size();
            ordered_json arr = ordered_json::array();
            for (const auto& [a, b] : pairs) arr.push_back(ordered_json::array({a, b}));
            o["pairs"] = arr;
            os << o.dump() << "\n";
            break;
        }
        case Format::csv:
            write_twins_csv(os, pairs);
            break;
        case Format::text:
            for (const auto& [a, b] : pairs) os << "(" << a << ", " << b << ")\n";
            os << pairs.size() << " pair" << (pairs.size() == 1 ? "" : "s") << " up to " << upto
               << "\n";
            break;
    }
    return 0;
}

const char* status_token(ConstraintStatus st) {
    switch (st) {
        case ConstraintStatus::equals_one: return "equals_one";
        case ConstraintStatus::violates: return "violates";
        case ConstraintStatus::greater_than_two: return "greater_than_two";
    }
    return "?";
}

int cmd_twins_explain(std::ostream& os, Format fmt, u64 p) {
    require_prime("twins", p);
    TwinReport report = is_twin_leader(p);
    switch (fmt) {
        case Format::json:
            os << twin_report_json(report) << "\n";
            break;
        case Format::csv: {
            ConstraintTrace trace = constraint_trace(p);
            os << "d,s,status\n";
            for (const auto& row : trace.rows)
                os << row.d << ',' << row.s << ',' << status_token(row.status) << "\n";
            break;
        }
        case Format::text: {
            ConstraintTrace trace = constraint_trace(p);
            DivisorRange range = divisor_range(p);
            os << "R-constraints for " << p << "  (divisors " << range.lo << ".." << range.hi
               << ")\n";
            os << std::setw(6) << "d" << std::setw(6) << "s" << "  status\n";
            for (const auto& row : trace.rows) {
                os << std::setw(6) << row.d << std::setw(6) << row.s << "  ";
                switch (row.status) {
                    case ConstraintStatus::equals_one: os << "s = 1"; break;
                    case ConstraintStatus::violates: os << "s = 2  <- violation"; break;
                    case ConstraintStatus::greater_than_two: os << "s > 2"; break;
                }
                os << "\n";
            }
            if (report.verdict)
                os << "verdict: " << p << " is a twin leader (companion " << report.companion
                   << ")\n";
            else
                os << "verdict: " << p << " is not a twin leader\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- gaps ----

int cmd_gaps(std::ostream& os, Format fmt, u64 upto) {
    if (upto < 2) throw InputError("gaps: --upto must be at least 2");
    std::vector<u64> primes = sieve_upto(upto).primes();
    std::vector<GapRecord> records;
    std::vector<EstimateSet> ests;
    for (std::size_t i = 1; i < primes.size(); ++i) {
        records.push_back(gap_record(static_cast<u64>(i), primes[i - 1], primes[i]));
        ests.push_back(estimates(primes[i - 1], static_cast<u64>(i)));
    }
    maximal_gaps(records);
    switch (fmt) {
        case Format::json: {
            ordered_json o;
            o["upto"] = upto;
            o["count"] = records.size();
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < records.size(); ++i) {
                const GapRecord& r = records[i];
                const EstimateSet& e = ests[i];
                ordered_json rec;
                rec["index"] = r.index;
                rec["p"] = r.p;
                rec["p_next"] = r.p_next;
                rec["gap"] = r.gap;
                rec["merit"] = r.merit;
                rec["bound_paper"] = r.bound_paper;
                rec["bound_bertrand"] = r.bound_bertrand;
                rec["within_paper_bound"] = r.within_paper_bound;
                rec["is_maximal"] = r.is_maximal;
                rec["cramer"] = e.cramer;
                rec["shanks"] = e.shanks;
                rec["wolf"] = e.wolf;
                rec["gauss_pi"] = e.gauss_pi;
                arr.push_back(rec);
            }
            o["records"] = arr;
            os << o.dump() << "\n";
            break;
        }
        case Format::csv:
            write_gaps_csv(os, records, ests);
            break;
        case Format::text: {
            os << std::setw(7) << "index" << std::setw(10) << "p" << std::setw(10) << "p_next"
               << std::setw(6) << "gap" << std::setw(14) << "merit" << std::setw(8) << "bound"
               << "  maximal\n";
            for (const GapRecord& r : records) {
                os << std::setw(7) << r.index << std::setw(10) << r.p << std::setw(10) << r.p_next
                   << std::setw(6) << r.gap << std::setw(14) << format_real(r.merit)
                   << std::setw(8) << r.bound_paper << "  " << (r.is_maximal ? "*" : "") << "\n";
            }
            break;
        }
    }
    return 0;
}

// ------------------------------------------------------------ estimate ----

int cmd_estimate(std::ostream& os, Format fmt, u64 p) {
    if (p < 2) throw InputError("estimate: P must be at least 2");
    u64 pi = prime_count(p);
    EstimateSet est = estimates(p, pi);
    switch (fmt) {
        case Format::json: {
            ordered_json o;
            o["p"] = p;
            o["pi"] = pi;
            o["cramer"] = est.cramer;
            o["shanks"] = est.shanks;
            o["wolf"] = est.wolf;
            o["gauss_pi"] = est.gauss_pi;
            os << o.dump() << "\n";
            break;
        }
        case Format::csv:
            os << "p,pi,cramer,shanks,wolf,gauss_pi\n";
            os << p << ',' << pi << ',' << format_real(est.cramer) << ','
               << format_real(est.shanks) << ',' << format_real(est.wolf) << ','
               << format_real(est.gauss_pi) << "\n";
            break;
        case Format::text:
            os << "p        = " << p << "\n";
            os << "pi(p)    = " << pi << "\n";
            os << "cramer   = " << format_real(est.cramer) << "\n";
            os << "shanks   = " << format_real(est.shanks) << "\n";
            os << "wolf     = " << format_real(est.wolf) << "\n";
            os << "gauss_pi = " << format_real(est.gauss_pi) << "\n";
            break;
    }
    return 0;
}

// --------------------------------------------------------------- verify ----

void print_report_text(std::ostream& os, const CampaignReport& report) {
    os << "campaign: " << to_string(report.config.kind) << "\n";
    os << "  start index     : " << report.config.start_index << "\n";
    os << "  indices checked : " << report.primes_checked << "\n";
    os << "  discrepancies   : " << report.discrepancies.size() << "\n";
    if (report.config.kind == CampaignKind::next_prime) {
        os << "  beyond-range    : " << report.beyond_range_uses << "\n";
        os << "  max E           : " << report.max_observed_e << "\n";
    }
    if (report.config.kind != CampaignKind::twin)
        os << "  max gap         : " << report.max_observed_gap << "\n";
    if (report.config.kind == CampaignKind::twin)
        os << "  twin pairs      : " << report.twin_pairs_found << "\n";
    if (report.config.kind == CampaignKind::gap_bound)
        os << "  avg merit       : " << format_real(report.avg_merit) << "\n";
    os << "  workers         : " << report.config.worker_count << "\n";
    os << "  wall time       : " << format_real(report.wall_time_seconds) << " s\n";
    os << "  complete        : " << (report.complete ? "yes" : "no") << "\n";
    for (const auto& d : report.discrepancies)
        os << "  DISCREPANCY index=" << d.index << " p=" << d.p << " kind=" << d.claim_kind
           << " claimed=" << d.claimed << " oracle=" << d.oracle << "\n";
}

void print_discrepancies_csv(std::ostream& os, const CampaignReport& report) {
    os << "index,p,claim_kind,claimed,oracle\n";
    for (const auto& d : report.discrepancies)
        os << d.index << ',' << d.p << ',' << d.claim_kind << ',' << d.claimed << ','
           << d.oracle << "\n";
}

int cmd_verify(std::ostream& os, Format fmt, const CampaignConfig& cfg) {
    CampaignReport report = run_campaign(cfg);
    switch (fmt) {
        case Format::json: os << report.to_json() << "\n"; break;
        case Format::csv: print_discrepancies_csv(os, report); break;
        case Format::text: print_report_text(os, report); break;
    }
    if (!report.discrepancies.empty()) return 5;
    return 0;
}

// ---------------------------------------------------------------- bench ----

int cmd_bench(std::ostream& os, Format fmt, const std::string& out_dir) {
    CampaignConfig cfg;
    cfg.kind = CampaignKind::bench;
    cfg.output_path = out_dir;
    CampaignReport report = run_campaign(cfg);
    switch (fmt) {
        case Format::json:
            os << report.to_json() << "\n";
            break;
        case Format::csv:
            os << "scale,sample_prime,slack_ns_per_prime,sieve_ns_per_prime\n";
            for (const auto& row : report.bench_rows)
                os << row.scale << ',' << row.sample_prime << ','
                   << format_real(row.slack_ns_per_prime) << ','
                   << format_real(row.sieve_ns_per_prime) << "\n";
            break;
        case Format::text:
            os << std::setw(9) << "scale" << std::setw(14) << "sample_prime" << std::setw(22)
               << "slack_ns_per_prime" << std::setw(22) << "sieve_ns_per_prime" << "\n";
            for (const auto& row : report.bench_rows)
                os << std::setw(9) << row.scale << std::setw(14) << row.sample_prime
                   << std::setw(22) << format_real(row.slack_ns_per_prime) << std::setw(22)
                   << format_real(row.sieve_ns_per_prime) << "\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slack-arithmetic prime toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "slackprime 1.0.0");

    std::string format_str = "text";
    std::string out_path;
    app.add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path,
                   "write output to this file (verify/bench: artifact directory)");

    // next
    u64 next_p = 0, next_count = 1;
    CLI::App* next = app.add_subcommand("next", "successor of a prime via the slack method");
    next->fallthrough();
    next->add_option("P", next_p, "prime to start from")->required();
    next->add_option("--count", next_count, "number of successive steps")->capture_default_str();

    // slacks
    u64 slacks_p = 0;
    CLI::App* slacks = app.add_subcommand("slacks", "slack list over the divisor range");
    slacks->fallthrough();
    slacks->add_option("P", slacks_p, "odd prime >= 5")->required();

    // twins
    u64 twins_upto = 0, twins_explain_p = 0;
    bool include_3_5 = false;
    CLI::App* twins = app.add_subcommand("twins", "twin-prime pairs / twin-leader analysis");
    twins->fallthrough();
    CLI::Option* opt_upto = twins->add_option("--upto", twins_upto, "list twin pairs up to this bound");
    CLI::Option* opt_explain =
        twins->add_option("--explain", twins_explain_p, "show the R-constraint verdict for one prime");
    twins->add_flag("--include-3-5", include_3_5, "include the (3, 5) pair when listing");
    opt_upto->excludes(opt_explain);
    opt_explain->excludes(opt_upto);

    // gaps
    u64 gaps_upto = 0;
    CLI::App* gaps = app.add_subcommand("gaps", "prime gaps, merits, bounds, and size estimates");
    gaps->fallthrough();
    gaps->add_option("--upto", gaps_upto, "largest prime to include")->required();

    // estimate
    u64 estimate_p = 0;
    CLI::App* estimate = app.add_subcommand("estimate", "gap-size estimators at a point");
    estimate->fallthrough();
    estimate->add_option("P", estimate_p, "evaluation point >= 2")->required();

    // verify
    std::string verify_kind;
    std::optional<u64> verify_start;
    u64 verify_count = 10000, verify_every = 4096;
    u32 verify_workers = 1;
    bool verify_chain = false, verify_fast = false, verify_resume = false;
    CLI::App* verify = app.add_subcommand("verify", "adjudicate a claim against the oracle");
    verify->fallthrough();
    verify->add_option("KIND", verify_kind, "one of: next-prime, gap-bound, twin")
        ->required()
        ->check(CLI::IsMember({"next-prime", "gap-bound", "twin"}));
    verify->add_option("--start", verify_start,
                       "first prime index (default 3; gap-bound defaults to 1)");
    verify->add_option("--count", verify_count, "number of prime indices to check")
        ->capture_default_str();
    verify->add_option("--workers", verify_workers, "worker threads")->capture_default_str();
    verify->add_option("--checkpoint-every", verify_every, "indices per checkpoint block")
        ->capture_default_str();
    verify->add_flag("--chain", verify_chain,
                     "feed each successor into the next step (next-prime, single worker)");
    verify->add_flag("--fast", verify_fast, "use the segmented divisor walk");
    verify->add_flag("--resume", verify_resume, "resume from an existing checkpoint");

    // bench
    CLI::App* bench = app.add_subcommand("bench", "per-prime cost of the slack method vs the sieve");
    bench->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Format fmt = parse_format(format_str);
    const bool out_is_dir = app.got_subcommand(verify) || app.got_subcommand(bench);
    std::ofstream out_file;
    std::ostream* os = &std::cout;
    if (!out_path.empty() && !out_is_dir) {
        out_file.open(out_path, std::ios::binary);
        if (!out_file) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return 3;
        }
        os = &out_file;
    }

    try {
        if (app.got_subcommand(next)) return cmd_next(*os, fmt, next_p, next_count);
        if (app.got_subcommand(slacks)) return cmd_slacks(*os, fmt, slacks_p);
        if (app.got_subcommand(twins)) {
            if (opt_explain->count() > 0) return cmd_twins_explain(*os, fmt, twins_explain_p);
            if (opt_upto->count() > 0) return cmd_twins_upto(*os, fmt, twins_upto, include_3_5);
            throw CLI::RequiredError("twins: one of --upto / --explain");
        }
        if (app.got_subcommand(gaps)) return cmd_gaps(*os, fmt, gaps_upto);
        if (app.got_subcommand(estimate)) return cmd_estimate(*os, fmt, estimate_p);
        if (app.got_subcommand(verify)) {
            CampaignConfig cfg;
            cfg.kind = campaign_kind_from_string(verify_kind);
            cfg.start_index =
                verify_start.value_or(cfg.kind == CampaignKind::gap_bound ? u64{1} : u64{3});
            cfg.count = verify_count;
            cfg.worker_count = verify_workers;
            cfg.checkpoint_every = verify_every;
            cfg.output_path = out_path.empty() ? "." : out_path;
            cfg.chain = verify_chain;
            cfg.fast = verify_fast;
            cfg.resume = verify_resume;
            return cmd_verify(*os, fmt, cfg);
        }
        if (app.got_subcommand(bench)) return cmd_bench(*os, fmt, out_path);
    } catch (const CLI::RequiredError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
