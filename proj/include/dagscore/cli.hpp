#ifndef DAGSCORE_CLI_HPP
#define DAGSCORE_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dagscore/report.hpp"
#include "dagscore/scenarios.hpp"

namespace dagscore::cli {

enum class ShdChoice { Classic, Weighted, Both };

struct RunConfig {
    EvaluationMode mode = EvaluationMode::StrictDag;
    ShdChoice shd = ShdChoice::Both;
    ReportFormat format = ReportFormat::Csv;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> seed;
};

// Exit codes: 0 success, 2 input/validation error, 3 reproduction-check
// failure, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_compare(const std::string& true_path, const std::string& learnt_path,
                const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_batch(const std::string& manifest_path, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_rank(const std::string& manifest_path, const RunConfig& config, std::ostream& out,
             std::ostream& err);

// `expected_overrides` lets a test harness tamper with expected cells
// (key "scenario:metric") to exercise the FAIL path.
int cmd_scenarios(FixtureTable which, const RunConfig& config, std::ostream& out,
                  std::ostream& err,
                  const std::map<std::string, std::string>& expected_overrides = {});

struct GenOptions {
    int nodes = 10;
    double density = 0.2;
    std::uint64_t seed = 1;
    std::string out_dir;
    // Each axis is an inclusive range; a fixed count is lo == hi.
    long long deletions_lo = 0, deletions_hi = 0;
    long long insertions_lo = 0, insertions_hi = 0;
    long long reversals_lo = 0, reversals_hi = 0;
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

} // namespace dagscore::cli

#endif
