#include "dagscore/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dagscore {

namespace {

void warn(WarningList* warnings, const std::string& message) {
    if (warnings) warnings->push_back(message);
}

double score_or_zero(const Score& s) {
    return s.is_defined() ? s.value() : 0.0;
}

} // namespace

double normalize_bsf(double bsf) {
    if (bsf < -1.0 || bsf > 1.0) {
        throw Error(ErrorKind::OutOfRange, "bsf outside [-1, 1]");
    }
    return (bsf + 1.0) / 2.0;
}

std::vector<double> normalize_shd(const std::vector<double>& shd_values_in_group,
                                  WarningList* warnings) {
    if (shd_values_in_group.empty()) {
        throw Error(ErrorKind::EmptyGroup, "cannot normalize an empty group");
    }
    double max = *std::max_element(shd_values_in_group.begin(), shd_values_in_group.end());
    std::vector<double> result;
    result.reserve(shd_values_in_group.size());
    if (max == 0.0) {
        // Every graph in the group is perfect; 0/0 reads as "all best".
        warn(warnings, "SHD group maximum is 0; normalizing all values to 1");
        result.assign(shd_values_in_group.size(), 1.0);
        return result;
    }
    for (double v : shd_values_in_group) {
        result.push_back(1.0 - v / max);
    }
    return result;
}

std::vector<double> normalize_ddm(const std::vector<double>& ddm_values_in_group,
                                  WarningList* warnings) {
    if (ddm_values_in_group.empty()) {
        throw Error(ErrorKind::EmptyGroup, "cannot normalize an empty group");
    }
    double min = *std::min_element(ddm_values_in_group.begin(), ddm_values_in_group.end());
    double shift = std::abs(min);
    double denom = shift + 1.0;
    std::vector<double> result;
    result.reserve(ddm_values_in_group.size());
    bool clamped = false;
    for (double v : ddm_values_in_group) {
        double n = (v + shift) / denom;
        if (n < 0.0 || n > 1.0) {
            // Only reachable for inputs above a DDM's [.., 1] range.
            n = std::clamp(n, 0.0, 1.0);
            clamped = true;
        }
        result.push_back(n);
    }
    if (clamped) {
        warn(warnings, "DDM normalization clamped values outside [0, 1]");
    }
    return result;
}

double normalize_f1(const Score& f1) {
    return score_or_zero(f1);
}

RankedSeries build_series(const std::vector<ScoredRecord>& records, ShdWeighting weighting,
                          WarningList* warnings) {
    // Per-group SHD/DDM normalization, keyed by ground-truth group.
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        groups[records[idx].group_id].push_back(idx);
    }
    std::vector<double> shd_n(records.size(), 0.0);
    std::vector<double> ddm_n(records.size(), 0.0);
    for (const auto& [group_id, indices] : groups) {
        (void)group_id;
        std::vector<double> shd_values;
        std::vector<double> ddm_values;
        shd_values.reserve(indices.size());
        ddm_values.reserve(indices.size());
        for (std::size_t idx : indices) {
            const MetricScores& s = records[idx].scores;
            shd_values.push_back(weighting == ShdWeighting::Weighted ? s.shd_weighted
                                                                     : s.shd_classic);
            ddm_values.push_back(s.ddm);
        }
        std::vector<double> shd_norm = normalize_shd(shd_values, warnings);
        std::vector<double> ddm_norm = normalize_ddm(ddm_values, warnings);
        for (std::size_t k = 0; k < indices.size(); ++k) {
            shd_n[indices[k]] = shd_norm[k];
            ddm_n[indices[k]] = ddm_norm[k];
        }
    }

    RankedSeries series;
    series.entries.reserve(records.size());
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        const ScoredRecord& r = records[idx];
        SeriesEntry entry;
        entry.record = r;
        entry.bsf_n = normalize_bsf(r.scores.bsf);
        entry.pr = score_or_zero(r.scores.pr);
        entry.re = score_or_zero(r.scores.re);
        entry.f1_n = normalize_f1(r.scores.f1);
        entry.shd_n = shd_n[idx];
        entry.ddm_n = ddm_n[idx];
        series.entries.push_back(std::move(entry));
    }
    std::stable_sort(series.entries.begin(), series.entries.end(),
                     [](const SeriesEntry& x, const SeriesEntry& y) {
                         if (x.record.scores.bsf != y.record.scores.bsf) {
                             return x.record.scores.bsf > y.record.scores.bsf;
                         }
                         if (x.record.group_id != y.record.group_id) {
                             return x.record.group_id < y.record.group_id;
                         }
                         return x.record.learnt_id < y.record.learnt_id;
                     });
    return series;
}

long long disagreement_counts(const RankedSeries& series, const std::string& metric) {
    double SeriesEntry::*field = nullptr;
    if (metric == "pr") field = &SeriesEntry::pr;
    else if (metric == "re") field = &SeriesEntry::re;
    else if (metric == "f1_n") field = &SeriesEntry::f1_n;
    else if (metric == "shd_n") field = &SeriesEntry::shd_n;
    else if (metric == "ddm_n") field = &SeriesEntry::ddm_n;
    else if (metric == "bsf_n") field = &SeriesEntry::bsf_n;
    else {
        throw Error(ErrorKind::UnknownMetric, "unknown series metric '" + metric + "'");
    }
    long long count = 0;
    const auto& entries = series.entries;
    for (std::size_t x = 0; x < entries.size(); ++x) {
        for (std::size_t y = x + 1; y < entries.size(); ++y) {
            if (entries[x].record.scores.bsf <= entries[y].record.scores.bsf) continue;
            if (entries[y].*field > entries[x].*field) ++count;
        }
    }
    return count;
}

} // namespace dagscore
