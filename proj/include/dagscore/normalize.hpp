#ifndef DAGSCORE_NORMALIZE_HPP
#define DAGSCORE_NORMALIZE_HPP

#include <string>
#include <vector>

#include "dagscore/metrics.hpp"

namespace dagscore {

struct ScoredRecord {
    std::string group_id;
    std::string learnt_id;
    MetricScores scores;
};

struct SeriesEntry {
    ScoredRecord record;
    double bsf_n = 0.0;
    double pr = 0.0;  // undefined precision/recall enter the series as 0
    double re = 0.0;
    double f1_n = 0.0;
    double shd_n = 0.0;
    double ddm_n = 0.0;
};

// Records ordered by descending BSF with the normalized companion columns.
struct RankedSeries {
    std::vector<SeriesEntry> entries;
};

using WarningList = std::vector<std::string>;

// (bsf + 1) / 2; input outside [-1, 1] is rejected.
double normalize_bsf(double bsf);

// 1 - v / max(group), so the worst graph in the group scores 0. An all-zero
// group (every graph perfect) maps to all ones with a warning.
std::vector<double> normalize_shd(const std::vector<double>& shd_values_in_group,
                                  WarningList* warnings = nullptr);

// (v + |min(group)|) / (|min(group)| + 1); clamped to [0, 1] with a warning
// when an input falls outside the formula's intended range.
std::vector<double> normalize_ddm(const std::vector<double>& ddm_values_in_group,
                                  WarningList* warnings = nullptr);

// Undefined F1 counts as 0; defined values pass through.
double normalize_f1(const Score& f1);

// Sorts by descending BSF (ties broken by (group_id, learnt_id)) and attaches
// normalized values; SHD/DDM normalization groups are keyed by group_id.
// `weighting` selects which SHD column feeds the normalization.
RankedSeries build_series(const std::vector<ScoredRecord>& records,
                          ShdWeighting weighting = ShdWeighting::Weighted,
                          WarningList* warnings = nullptr);

// Pairwise order inversions: pairs ranked strictly by BSF where the named
// metric strictly prefers the later record. Metric is one of pr, re, f1_n,
// shd_n, ddm_n, bsf_n.
long long disagreement_counts(const RankedSeries& series, const std::string& metric);

} // namespace dagscore

#endif
