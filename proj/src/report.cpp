#include "dagscore/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace dagscore {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

std::string score_cell(const Score& score) {
    return score.is_defined() ? format_real(score.value()) : "n/a";
}

// JSON numbers go through the same 6-significant-digit rendering so both
// formats agree byte-for-byte on values.
nlohmann::json score_json(const Score& score) {
    if (!score.is_defined()) return nullptr;
    return std::stod(format_real(score.value()));
}

nlohmann::json real_json(double value) {
    return std::stod(format_real(value));
}

constexpr const char* kReportHeader =
    "group_id,learnt_id,tp,tp_partial,fp,tn,fn_eff,pr,re,f1,shd_classic,shd_weighted,ddm,bsf,"
    "bsf_n,shd_n,ddm_n,f1_n";

} // namespace

std::string format_real(double value) {
    if (value == 0.0) value = 0.0; // drop the sign of -0
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string write_report(const std::vector<ReportRow>& rows, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << kReportHeader << "\n";
        for (const ReportRow& r : rows) {
            out << csv_escape(r.group_id) << "," << csv_escape(r.learnt_id) << "," << r.tally.tp
                << "," << r.tally.tp_partial << "," << r.tally.fp << "," << r.tally.tn << ","
                << format_real(r.fn_eff) << "," << score_cell(r.scores.pr) << ","
                << score_cell(r.scores.re) << "," << score_cell(r.scores.f1) << ","
                << format_real(r.scores.shd_classic) << "," << format_real(r.scores.shd_weighted)
                << "," << format_real(r.scores.ddm) << "," << format_real(r.scores.bsf) << ","
                << format_real(r.bsf_n) << "," << format_real(r.shd_n) << ","
                << format_real(r.ddm_n) << "," << format_real(r.f1_n) << "\n";
        }
        return out.str();
    }
    nlohmann::json records = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json item;
        item["group_id"] = r.group_id;
        item["learnt_id"] = r.learnt_id;
        item["tp"] = r.tally.tp;
        item["tp_partial"] = r.tally.tp_partial;
        item["fp"] = r.tally.fp;
        item["tn"] = r.tally.tn;
        item["fn_eff"] = real_json(r.fn_eff);
        item["pr"] = score_json(r.scores.pr);
        item["re"] = score_json(r.scores.re);
        item["f1"] = score_json(r.scores.f1);
        item["shd_classic"] = real_json(r.scores.shd_classic);
        item["shd_weighted"] = real_json(r.scores.shd_weighted);
        item["ddm"] = real_json(r.scores.ddm);
        item["bsf"] = real_json(r.scores.bsf);
        item["bsf_n"] = real_json(r.bsf_n);
        item["shd_n"] = real_json(r.shd_n);
        item["ddm_n"] = real_json(r.ddm_n);
        item["f1_n"] = real_json(r.f1_n);
        records.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

std::string write_series(const RankedSeries& series, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "rank,group_id,learnt_id,bsf_n,pr,re,f1_n,shd_n,ddm_n\n";
        int rank = 0;
        for (const SeriesEntry& e : series.entries) {
            out << ++rank << "," << csv_escape(e.record.group_id) << ","
                << csv_escape(e.record.learnt_id) << "," << format_real(e.bsf_n) << ","
                << format_real(e.pr) << "," << format_real(e.re) << "," << format_real(e.f1_n)
                << "," << format_real(e.shd_n) << "," << format_real(e.ddm_n) << "\n";
        }
        return out.str();
    }
    nlohmann::json entries = nlohmann::json::array();
    int rank = 0;
    for (const SeriesEntry& e : series.entries) {
        nlohmann::json item;
        item["rank"] = ++rank;
        item["group_id"] = e.record.group_id;
        item["learnt_id"] = e.record.learnt_id;
        item["bsf_n"] = real_json(e.bsf_n);
        item["pr"] = real_json(e.pr);
        item["re"] = real_json(e.re);
        item["f1_n"] = real_json(e.f1_n);
        item["shd_n"] = real_json(e.shd_n);
        item["ddm_n"] = real_json(e.ddm_n);
        entries.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["series"] = std::move(entries);
    return doc.dump(2) + "\n";
}

DisagreementSummary summarize_disagreements(const RankedSeries& series) {
    DisagreementSummary summary;
    for (const char* metric : {"pr", "re", "f1_n", "shd_n", "ddm_n"}) {
        summary.counts.emplace_back(metric, disagreement_counts(series, metric));
    }
    return summary;
}

std::string disagreements_to_json(const DisagreementSummary& summary) {
    nlohmann::json doc;
    for (const auto& [metric, count] : summary.counts) {
        doc["disagreements"][metric] = count;
    }
    return doc.dump(2) + "\n";
}

} // namespace dagscore
