#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "slackprime/common.hpp"

namespace slackprime {

// R-constraint evaluation for one prime p: the constraints demand
// p mod d != d - 2 for every divisor d in [2, (p-1)/2]; p leads a twin pair
// exactly when none is violated.
struct TwinReport {
    u64 p;
    u64 checked_divisors;         // (p-1)/2 - 1
    std::vector<u64> violations;  // ascending divisors d with p mod d == d - 2
    bool verdict;                 // true iff violations is empty
    u64 companion;                // p + 2 when verdict is true, else 0
};

// Every violating divisor, ascending, over the full range. Requires odd
// p >= 5; a divisor of p in range (composite input) raises InputError.
std::vector<u64> r_constraint_violations(u64 p);

// Verdict only, stopping at the first violation. Same domain checks.
bool twin_leader_verdict(u64 p);

// Full report: complete violation list plus verdict and companion.
TwinReport is_twin_leader(u64 p);

// Per-divisor classification of the slack s = slack(p, d):
//   equals_one        s == 1  (remainder d-1)
//   violates          s == 2  (remainder d-2; the twin-blocking case)
//   greater_than_two  s >  2
enum class ConstraintStatus { equals_one, violates, greater_than_two };

struct ConstraintRow {
    u64 d;
    u64 s;
    ConstraintStatus status;

    bool operator==(const ConstraintRow&) const = default;
};

struct ConstraintTrace {
    u64 p;
    std::vector<ConstraintRow> rows;  // one per divisor, ascending
};

ConstraintTrace constraint_trace(u64 p);

// All pairs (p, p+2) with prime p >= 5, prime p+2, and p+2 <= u, ascending.
// The machinery starts at p = 5, so (3, 5) is excluded unless include_3_5
// is set. Requires u >= 5; sieving to u observes the memory budget.
std::vector<std::pair<u64, u64>> twin_pairs_upto(u64 u, bool include_3_5 = false);

// JSON object with fields p, violations, verdict, and companion -- companion
// is present only when the verdict is true.
std::string twin_report_json(const TwinReport& report);

// CSV emission: header "p,p_plus_2", one pair per row.
std::string twins_csv_header();
void write_twins_csv(std::ostream& os, const std::vector<std::pair<u64, u64>>& pairs);

}  // namespace slackprime
