#ifndef DAGSCORE_REPORT_HPP
#define DAGSCORE_REPORT_HPP

#include <string>
#include <vector>

#include "dagscore/normalize.hpp"

namespace dagscore {

enum class ReportFormat { Csv, Json };

// One fully scored learnt graph: raw tally, scores, normalized columns.
struct ReportRow {
    std::string group_id;
    std::string learnt_id;
    ConfusionTally tally;
    MetricScores scores;
    double fn_eff = 0.0;
    double bsf_n = 0.0;
    double shd_n = 0.0;
    double ddm_n = 0.0;
    double f1_n = 0.0;
};

// Fixed-precision rendering: up to six significant digits, no trailing
// zeros, "-0" never emitted. Keeps report bytes stable across runs.
std::string format_real(double value);

// CSV header:
//   group_id,learnt_id,tp,tp_partial,fp,tn,fn_eff,pr,re,f1,shd_classic,
//   shd_weighted,ddm,bsf,bsf_n,shd_n,ddm_n,f1_n
// Undefined scores render as "n/a" (CSV) or null (JSON).
std::string write_report(const std::vector<ReportRow>& rows, ReportFormat format);

// Series CSV columns: rank,group_id,learnt_id,bsf_n,pr,re,f1_n,shd_n,ddm_n
std::string write_series(const RankedSeries& series, ReportFormat format);

struct DisagreementSummary {
    std::vector<std::pair<std::string, long long>> counts; // metric -> inversions
};

DisagreementSummary summarize_disagreements(const RankedSeries& series);
std::string disagreements_to_json(const DisagreementSummary& summary);

} // namespace dagscore

#endif
