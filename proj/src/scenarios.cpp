#include "dagscore/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace dagscore {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorKind::OutOfRange, "next_below requires a positive bound");
    }
    // Reject the tail of the 64-bit range that would bias the modulus.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t word;
    do {
        word = next_word();
    } while (word > limit);
    return word % bound;
}

double Rng::next_unit() {
    return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

const std::string* ScenarioFixture::expected_cell(const std::string& metric) const {
    for (const auto& [name, cell] : expected) {
        if (name == metric) return &cell;
    }
    return nullptr;
}

namespace {

ScenarioFixture row(std::string id, std::string description, ConfusionTally tally,
                    std::vector<std::pair<std::string, std::string>> expected) {
    return ScenarioFixture{std::move(id), std::move(description), tally, std::move(expected)};
}

} // namespace

std::vector<ScenarioFixture> table_fixtures(FixtureTable which) {
    std::vector<ScenarioFixture> rows;
    if (which == FixtureTable::Table3) {
        // Plain confusion-matrix scoring: reversed arcs were counted as FN,
        // so tp_partial is zero throughout and SHD is the classic weighting.
        rows.push_back(row("1.1", "Discrepancies in TP", {10, 0, 20, 15, 0},
                           {{"pr", "0.33"}, {"re", "1"}, {"f1", "0.5"}, {"shd", "20"}, {"ddm", "-1"}}));
        rows.push_back(row("1.2", "Discrepancies in TP", {5, 0, 20, 15, 5},
                           {{"pr", "0.2"}, {"re", "0.5"}, {"f1", "0.29"}, {"shd", "25"}, {"ddm", "-2"}}));
        rows.push_back(row("1.3", "Discrepancies in TP", {0, 0, 20, 15, 10},
                           {{"pr", "0"}, {"re", "0"}, {"f1", "n/a"}, {"shd", "30"}, {"ddm", "-3"}}));
        rows.push_back(row("2.1", "Discrepancies in FP", {5, 0, 15, 20, 5},
                           {{"pr", "0.25"}, {"re", "0.5"}, {"f1", "0.33"}, {"shd", "20"}, {"ddm", "-1.5"}}));
        rows.push_back(row("2.2", "Discrepancies in FP", {5, 0, 10, 25, 5},
                           {{"pr", "0.33"}, {"re", "0.5"}, {"f1", "0.4"}, {"shd", "15"}, {"ddm", "-1"}}));
        rows.push_back(row("2.3", "Discrepancies in FP", {5, 0, 5, 30, 5},
                           {{"pr", "0.5"}, {"re", "0.5"}, {"f1", "0.5"}, {"shd", "10"}, {"ddm", "-0.5"}}));
        rows.push_back(row("3.1", "Fully connected graph A", {10, 0, 35, 0, 0},
                           {{"pr", "0.22"}, {"re", "1"}, {"f1", "0.36"}, {"shd", "35"}, {"ddm", "-2.5"}}));
        rows.push_back(row("3.2", "Fully connected graph B", {5, 0, 35, 0, 5},
                           {{"pr", "0.125"}, {"re", "0.5"}, {"f1", "0.2"}, {"shd", "40"}, {"ddm", "-3.5"}}));
        rows.push_back(row("3.3", "Empty graph", {0, 0, 0, 35, 10},
                           {{"pr", "n/a"}, {"re", "0"}, {"f1", "n/a"}, {"shd", "10"}, {"ddm", "-1"}}));
        rows.push_back(row("3.4", "Most inaccurate graph", {0, 0, 35, 0, 10},
                           {{"pr", "0"}, {"re", "0"}, {"f1", "n/a"}, {"shd", "45"}, {"ddm", "-4.5"}}));
        rows.push_back(row("3.5", "Most accurate graph", {10, 0, 0, 35, 0},
                           {{"pr", "1"}, {"re", "1"}, {"f1", "1"}, {"shd", "0"}, {"ddm", "1"}}));
        return rows;
    }
    // table5: partial matches carried in their own column, FN holds the
    // effective count fn_hard + tp_partial/2, SHD is the weighted variant,
    // plus the BSF column.
    rows.push_back(row("1.1", "Discrepancies in TP", {8, 2, 20, 15, 0},
                       {{"fn", "1"}, {"pr", "0.3"}, {"re", "0.9"}, {"f1", "0.45"},
                        {"shd", "21"}, {"ddm", "-1.2"}, {"bsf", "0.329"}}));
    rows.push_back(row("1.2", "Discrepancies in TP", {4, 1, 20, 15, 5},
                       {{"fn", "5.5"}, {"pr", "0.18"}, {"re", "0.45"}, {"f1", "0.257"},
                        {"shd", "25.5"}, {"ddm", "-2.1"}, {"bsf", "-0.121"}}));
    rows.push_back(row("1.3", "Discrepancies in TP", {0, 0, 20, 15, 10},
                       {{"fn", "10"}, {"pr", "0"}, {"re", "0"}, {"f1", "n/a"},
                        {"shd", "30"}, {"ddm", "-3"}, {"bsf", "-0.571"}}));
    rows.push_back(row("2.1", "Discrepancies in FP", {4, 1, 15, 20, 5},
                       {{"fn", "5.5"}, {"pr", "0.225"}, {"re", "0.45"}, {"f1", "0.3"},
                        {"shd", "20.5"}, {"ddm", "-1.6"}, {"bsf", "0.021"}}));
    rows.push_back(row("2.2", "Discrepancies in FP", {4, 1, 10, 25, 5},
                       {{"fn", "5.5"}, {"pr", "0.3"}, {"re", "0.45"}, {"f1", "0.36"},
                        {"shd", "15.5"}, {"ddm", "-1.1"}, {"bsf", "0.164"}}));
    rows.push_back(row("2.3", "Discrepancies in FP", {4, 1, 5, 30, 5},
                       {{"fn", "5.5"}, {"pr", "0.45"}, {"re", "0.45"}, {"f1", "0.45"},
                        {"shd", "10.5"}, {"ddm", "-0.6"}, {"bsf", "0.307"}}));
    rows.push_back(row("3.1", "Fully connected graph A", {10, 0, 35, 0, 0},
                       {{"fn", "0"}, {"pr", "0.22"}, {"re", "1"}, {"f1", "0.364"},
                        {"shd", "35"}, {"ddm", "-2.5"}, {"bsf", "0"}}));
    rows.push_back(row("3.2", "Fully connected graph B", {5, 5, 35, 0, 0},
                       {{"fn", "2.5"}, {"pr", "0.167"}, {"re", "0.75"}, {"f1", "0.273"},
                        {"shd", "37.5"}, {"ddm", "-3"}, {"bsf", "-0.25"}}));
    rows.push_back(row("3.3", "Empty graph", {0, 0, 0, 35, 10},
                       {{"fn", "10"}, {"pr", "n/a"}, {"re", "0"}, {"f1", "n/a"},
                        {"shd", "10"}, {"ddm", "-1"}, {"bsf", "0"}}));
    rows.push_back(row("3.4", "Most inaccurate graph", {0, 0, 35, 0, 10},
                       {{"fn", "10"}, {"pr", "0"}, {"re", "0"}, {"f1", "n/a"},
                        {"shd", "45"}, {"ddm", "-4.5"}, {"bsf", "-1"}}));
    rows.push_back(row("3.5", "Most accurate graph", {10, 0, 0, 35, 0},
                       {{"fn", "0"}, {"pr", "1"}, {"re", "1"}, {"f1", "1"},
                        {"shd", "0"}, {"ddm", "1"}, {"bsf", "1"}}));
    return rows;
}

double cell_tolerance(const std::string& expected) {
    auto dot = expected.find('.');
    int decimals = dot == std::string::npos ? 0 : static_cast<int>(expected.size() - dot - 1);
    // Count-like cells print exactly (including halves), so they stay at the
    // base tolerance; rounded fractional cells match at half an ulp of the
    // printed precision.
    if (decimals == 0) return 5e-4;
    double half_ulp = 0.5 * std::pow(10.0, -decimals);
    return std::max(half_ulp, 5e-4);
}

bool cell_matches(const std::string& expected, double computed) {
    if (expected == "n/a") return false;
    double value = std::strtod(expected.c_str(), nullptr);
    return std::abs(computed - value) <= cell_tolerance(expected);
}

bool cell_matches(const std::string& expected, const Score& computed) {
    if (expected == "n/a") return !computed.is_defined();
    return computed.is_defined() && cell_matches(expected, computed.value());
}

MixedGraph empty_learnt(const MixedGraph& truth) {
    return MixedGraph(truth.node_labels());
}

MixedGraph fully_connected_A(const MixedGraph& truth) {
    std::vector<int> order = truth.topological_order(); // throws NotADag
    int n = truth.node_count();
    std::vector<int> position(n);
    for (int k = 0; k < n; ++k) position[order[k]] = k;
    MixedGraph result = truth;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (result.adjacent(i, j)) continue;
            if (position[i] < position[j]) {
                result.set_pair(i, j, MixedGraph::PairMark::Forward);
            } else {
                result.set_pair(j, i, MixedGraph::PairMark::Forward);
            }
        }
    }
    return result;
}

MixedGraph most_inaccurate(const MixedGraph& truth) {
    if (!truth.is_dag()) {
        throw Error(ErrorKind::NotADag, "truth must be a DAG");
    }
    MixedGraph result(truth.node_labels());
    int n = truth.node_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!truth.adjacent(i, j)) {
                result.set_pair(i, j, MixedGraph::PairMark::Forward);
            }
        }
    }
    return result;
}

MixedGraph random_dag(int n, double density, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::OutOfRange, "random_dag needs at least 2 nodes");
    }
    if (!(density > 0.0 && density < 1.0)) {
        throw Error(ErrorKind::OutOfRange, "density must lie in (0, 1)");
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int k = 1; k <= n; ++k) labels.push_back("X" + std::to_string(k));
    MixedGraph graph(std::move(labels));

    Rng rng(seed);
    std::vector<int> position(n);
    for (int k = 0; k < n; ++k) position[k] = k;
    rng.shuffle(position); // position[v] = rank of node v in the topological order

    // Pair scan in (i, j) row-major order; one unit draw per pair.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_unit() >= density) continue;
            if (position[i] < position[j]) {
                graph.set_pair(i, j, MixedGraph::PairMark::Forward);
            } else {
                graph.set_pair(j, i, MixedGraph::PairMark::Forward);
            }
        }
    }
    return graph;
}

namespace {

std::vector<std::pair<int, int>> absent_pairs(const MixedGraph& graph) {
    std::vector<std::pair<int, int>> result;
    int n = graph.node_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!graph.adjacent(i, j)) result.emplace_back(i, j);
        }
    }
    return result;
}

} // namespace

MixedGraph perturb(const MixedGraph& dag, const PerturbationPlan& plan, WarningList* warnings) {
    if (!dag.is_dag()) {
        throw Error(ErrorKind::NotADag, "perturb requires a DAG");
    }
    long long arcs = dag.arc_count();
    long long absences = max_edges(dag.node_count()) - arcs;
    if (plan.deletions < 0 || plan.insertions < 0 || plan.reversals < 0 ||
        plan.deletions + plan.reversals > arcs || plan.insertions > absences) {
        throw Error(ErrorKind::InfeasiblePlan,
                    "plan does not fit the graph (arcs=" + std::to_string(arcs) +
                        ", absences=" + std::to_string(absences) + ")");
    }

    MixedGraph graph = dag;
    Rng rng(plan.seed);

    // Deletions: uniform over the current arcs.
    for (long long k = 0; k < plan.deletions; ++k) {
        auto current = graph.arcs();
        auto [tail, head] = current[rng.next_below(current.size())];
        graph.clear_pair(tail, head);
    }

    // Reversals: uniform over the remaining original arcs, without
    // replacement; a flip that would close a cycle is redrawn.
    std::vector<std::pair<int, int>> candidates = graph.arcs();
    long long reversed = 0;
    long long attempts = 0;
    const long long max_attempts = plan.reversals * 20 + 100;
    while (reversed < plan.reversals && !candidates.empty() && attempts < max_attempts) {
        ++attempts;
        std::size_t pick = rng.next_below(candidates.size());
        auto [tail, head] = candidates[pick];
        graph.set_pair(head, tail, MixedGraph::PairMark::Forward);
        if (graph.is_dag()) {
            ++reversed;
            candidates.erase(candidates.begin() + pick);
        } else {
            graph.set_pair(tail, head, MixedGraph::PairMark::Forward);
        }
    }
    if (reversed < plan.reversals) {
        if (warnings) {
            warnings->push_back("skipped " + std::to_string(plan.reversals - reversed) +
                                " reversal(s): every candidate flip closed a cycle");
        }
    }

    // Insertions: uniform over the currently absent pairs, oriented to keep
    // the graph acyclic (declaration order unless that closes a cycle).
    for (long long k = 0; k < plan.insertions; ++k) {
        auto absent = absent_pairs(graph);
        auto [i, j] = absent[rng.next_below(absent.size())];
        graph.set_pair(i, j, MixedGraph::PairMark::Forward);
        if (!graph.is_dag()) {
            graph.set_pair(j, i, MixedGraph::PairMark::Forward);
        }
    }
    return graph;
}

} // namespace dagscore
