#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slackprime/common.hpp"

namespace slackprime {

// One consecutive-prime pair with its gap, merit, and bound evaluations.
// bound_paper is the halved-successor ceiling floor((p+1)/2); bound_bertrand
// is the classical ceiling p (successor below 2p).
struct GapRecord {
    u64 index;        // 1-based index of p in the prime sequence
    u64 p;
    u64 p_next;
    u64 gap;          // p_next - p
    double merit;     // gap / ln(p)
    u64 bound_paper;
    u64 bound_bertrand;
    bool within_paper_bound;
    bool is_maximal = false;

    bool operator==(const GapRecord&) const = default;
};

// floor((p+1)/2). Requires p >= 2.
u64 paper_gap_bound(u64 p);

// gap / ln(p). Requires p >= 2; gap 0 is allowed and yields 0.
double merit(u64 gap, u64 p);

// Builds a record from an index and a consecutive pair. Requires p >= 2 and
// p_next > p. is_maximal starts false; maximal_gaps() assigns it.
GapRecord gap_record(u64 index, u64 p, u64 p_next);

// Flags the records whose gap strictly exceeds every earlier gap, in place,
// and returns the flagged subset. Records must be ordered by ascending index.
std::vector<GapRecord> maximal_gaps(std::vector<GapRecord>& records);

// Expected-gap estimators evaluated at p with pi_p = pi(p). cramer and
// shanks are both (ln p)^2, reported under separate labels; wolf is
// (p/pi_p)*(2 ln pi_p - ln p + c) with c = 0.2778769; gauss_pi is p/ln p.
struct EstimateSet {
    double cramer;
    double shanks;
    double wolf;
    double gauss_pi;
};

inline constexpr double kWolfC = 0.2778769;

// Requires p >= 2 and pi_p >= 1 (exact prime count at p).
EstimateSet estimates(u64 p, u64 pi_p);

// CSV emission. Header row mandatory; reals carry 10 significant digits in
// plain decimal; booleans are 0/1.
std::string gaps_csv_header();
std::string gaps_csv_row(const GapRecord& rec, const EstimateSet& est);
void write_gaps_csv(std::ostream& os, const std::vector<GapRecord>& records,
                    const std::vector<EstimateSet>& estimates);

}  // namespace slackprime
