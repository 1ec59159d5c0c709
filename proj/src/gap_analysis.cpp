#include "slackprime/gap_analysis.hpp"

#include <cmath>
#include <ostream>

namespace slackprime {

u64 paper_gap_bound(u64 p) {
    if (p < 2) throw InputError("paper_gap_bound: p must be >= 2");
    return checked_add(p, 1) / 2;
}

double merit(u64 gap, u64 p) {
    if (p < 2) throw InputError("merit: p must be >= 2");
    return static_cast<double>(gap) / std::log(static_cast<double>(p));
}

GapRecord gap_record(u64 index, u64 p, u64 p_next) {
    if (p < 2) throw InputError("gap_record: p must be >= 2");
    if (p_next <= p) throw InputError("gap_record: p_next must exceed p");
    GapRecord rec;
    rec.index = index;
    rec.p = p;
    rec.p_next = p_next;
    rec.gap = p_next - p;
    rec.merit = merit(rec.gap, p);
    rec.bound_paper = paper_gap_bound(p);
    rec.bound_bertrand = p;
    rec.within_paper_bound = rec.gap <= rec.bound_paper;
    rec.is_maximal = false;
    return rec;
}

std::vector<GapRecord> maximal_gaps(std::vector<GapRecord>& records) {
    for (std::size_t k = 1; k < records.size(); ++k)
        if (records[k].index <= records[k - 1].index)
            throw InputError("maximal_gaps: records must be ordered by ascending index");
    std::vector<GapRecord> out;
    u64 best = 0;
    for (GapRecord& rec : records) {
        rec.is_maximal = rec.gap > best;
        if (rec.is_maximal) {
            best = rec.gap;
            out.push_back(rec);
        }
    }
    return out;
}

EstimateSet estimates(u64 p, u64 pi_p) {
    if (p < 2) throw InputError("estimates: p must be >= 2");
    if (pi_p < 1) throw InputError("estimates: pi_p must be >= 1");
    double lp = std::log(static_cast<double>(p));
    double lpi = std::log(static_cast<double>(pi_p));
    EstimateSet est;
    est.cramer = lp * lp;
    est.shanks = lp * lp;
    est.wolf = (static_cast<double>(p) / static_cast<double>(pi_p)) * (2.0 * lpi - lp + kWolfC);
    est.gauss_pi = static_cast<double>(p) / lp;
    return est;
}

std::string gaps_csv_header() {
    return "i,p_i,p_next,gap,merit,bound_paper,within_paper_bound,is_maximal,cramer,wolf,gauss_pi";
}

std::string gaps_csv_row(const GapRecord& rec, const EstimateSet& est) {
    std::string row;
    row += std::to_string(rec.index);
    row += ',';
    row += std::to_string(rec.p);
    row += ',';
    row += std::to_string(rec.p_next);
    row += ',';
    row += std::to_string(rec.gap);
    row += ',';
    row += format_real(rec.merit);
    row += ',';
    row += std::to_string(rec.bound_paper);
    row += ',';
    row += rec.within_paper_bound ? '1' : '0';
    row += ',';
    row += rec.is_maximal ? '1' : '0';
    row += ',';
    row += format_real(est.cramer);
    row += ',';
    row += format_real(est.wolf);
    row += ',';
    row += format_real(est.gauss_pi);
    return row;
}

void write_gaps_csv(std::ostream& os, const std::vector<GapRecord>& records,
                    const std::vector<EstimateSet>& estimate_sets) {
    if (records.size() != estimate_sets.size())
        throw InputError("write_gaps_csv: records and estimates must align");
    os << gaps_csv_header() << '\n';
    for (std::size_t k = 0; k < records.size(); ++k)
        os << gaps_csv_row(records[k], estimate_sets[k]) << '\n';
}

}  // namespace slackprime
