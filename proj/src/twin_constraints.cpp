#include "slackprime/twin_constraints.hpp"

#include <ostream>

#include <json.hpp>

#include "slackprime/oracle.hpp"

namespace slackprime {

namespace {

// Shared domain validation + composite detection, mirroring build_slack_list.
void require_twin_domain(u64 p, const char* who) {
    if (p < 5) throw InputError(std::string(who) + ": p must be >= 5");
    if ((p & 1) == 0) throw InputError(std::string(who) + ": p must be odd");
}

}  // namespace

std::vector<u64> r_constraint_violations(u64 p) {
    require_twin_domain(p, "r_constraint_violations");
    std::vector<u64> out;
    u64 hi = (p - 1) / 2;
    for (u64 d = 2; d <= hi; ++d) {
        u64 r = p % d;
        if (r == 0)
            throw InputError("r_constraint_violations: " + std::to_string(p) +
                             " is divisible by " + std::to_string(d) + " — not prime");
        if (r == d - 2) out.push_back(d);
    }
    return out;
}

bool twin_leader_verdict(u64 p) {
    require_twin_domain(p, "twin_leader_verdict");
    u64 hi = (p - 1) / 2;
    for (u64 d = 2; d <= hi; ++d) {
        u64 r = p % d;
        if (r == 0)
            throw InputError("twin_leader_verdict: " + std::to_string(p) +
                             " is divisible by " + std::to_string(d) + " — not prime");
        if (r == d - 2) return false;
    }
    return true;
}

TwinReport is_twin_leader(u64 p) {
    TwinReport report;
    report.p = p;
    report.violations = r_constraint_violations(p);
    report.checked_divisors = (p - 1) / 2 - 1;
    report.verdict = report.violations.empty();
    report.companion = report.verdict ? checked_add(p, 2) : 0;
    return report;
}

ConstraintTrace constraint_trace(u64 p) {
    require_twin_domain(p, "constraint_trace");
    ConstraintTrace trace;
    trace.p = p;
    u64 hi = (p - 1) / 2;
    trace.rows.reserve(hi - 1);
    for (u64 d = 2; d <= hi; ++d) {
        u64 r = p % d;
        if (r == 0)
            throw InputError("constraint_trace: " + std::to_string(p) + " is divisible by " +
                             std::to_string(d) + " — not prime");
        u64 s = d - r;
        ConstraintStatus status = s == 1   ? ConstraintStatus::equals_one
                                  : s == 2 ? ConstraintStatus::violates
                                           : ConstraintStatus::greater_than_two;
        trace.rows.push_back(ConstraintRow{d, s, status});
    }
    return trace;
}

std::vector<std::pair<u64, u64>> twin_pairs_upto(u64 u, bool include_3_5) {
    if (u < 5) throw InputError("twin_pairs_upto: upper bound must be >= 5");
    std::vector<std::pair<u64, u64>> pairs;
    if (include_3_5) pairs.emplace_back(3, 5);
    PrimeTable table = sieve_upto(u);
    table.for_each_prime([&](u64 p) {
        if (p < 5 || p + 2 > u) return;
        if (twin_leader_verdict(p)) pairs.emplace_back(p, p + 2);
    });
    return pairs;
}

std::string twin_report_json(const TwinReport& report) {
    nlohmann::ordered_json j;
    j["p"] = report.p;
    j["violations"] = report.violations;
    j["verdict"] = report.verdict;
    if (report.verdict) j["companion"] = report.companion;
    return j.dump();
}

std::string twins_csv_header() {
    return "p,p_plus_2";
}

void write_twins_csv(std::ostream& os, const std::vector<std::pair<u64, u64>>& pairs) {
    os << twins_csv_header() << '\n';
    for (const auto& [p, q] : pairs) os << p << ',' << q << '\n';
}

}  // namespace slackprime
