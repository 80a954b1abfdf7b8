#ifndef DAGSCORE_SCENARIOS_HPP
#define DAGSCORE_SCENARIOS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dagscore/confusion.hpp"
#include "dagscore/normalize.hpp"

namespace dagscore {

// Deterministic draws on top of mt19937_64. The engine's constants are fixed
// by the C++ standard, and the derivations below avoid the library
// distributions whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_word() { return engine_(); }

    // Uniform integer in [0, bound) by rejection sampling.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t k = values.size(); k > 1; --k) {
            std::size_t pick = static_cast<std::size_t>(next_below(k));
            std::swap(values[k - 1], values[pick]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// One expected table row: the confusion tally plus every cell exactly as
// printed, "n/a" included.
struct ScenarioFixture {
    std::string scenario_id;
    std::string description;
    ConfusionTally tally;
    // metric name -> expected cell text ("0.329", "n/a", "45", ...)
    std::vector<std::pair<std::string, std::string>> expected;

    const std::string* expected_cell(const std::string& metric) const;
};

enum class FixtureTable { Table3, Table5 };

// All 11 scenario rows of the chosen table (canonical truth: 10 nodes,
// 10 arcs). Table3 carries the plain confusion-matrix scoring; Table5 the
// partial-match revision plus BSF.
std::vector<ScenarioFixture> table_fixtures(FixtureTable which);

// Expected cells are printed at varying precision; a computed value
// matches when it is within half an ulp of the printed precision, never
// looser than +/-0.0005 at three decimals.
bool cell_matches(const std::string& expected, double computed);
bool cell_matches(const std::string& expected, const Score& computed);
double cell_tolerance(const std::string& expected);

// Same nodes, every pair absent.
MixedGraph empty_learnt(const MixedGraph& truth);

// Keeps every true arc and fills every absent pair with an arc along a fixed
// topological order of the truth; the result is a fully connected DAG.
MixedGraph fully_connected_A(const MixedGraph& truth);

// Complement adjacency: arcs exactly where the truth has none, oriented along
// the node declaration order.
MixedGraph most_inaccurate(const MixedGraph& truth);

// Random node permutation, then each forward pair kept with probability
// `density`. Nodes are labeled X1..Xn. Deterministic per seed.
MixedGraph random_dag(int n, double density, std::uint64_t seed);

struct PerturbationPlan {
    long long deletions = 0;
    long long insertions = 0;
    long long reversals = 0;
    std::uint64_t seed = 0;
};

// Applies the planned edit counts in order: deletions, reversals (redrawn on
// cycle, skipped after bounded retries with a warning), insertions oriented
// to keep the graph acyclic. Throws InfeasiblePlan when the counts do not fit
// the input graph.
MixedGraph perturb(const MixedGraph& dag, const PerturbationPlan& plan,
                   WarningList* warnings = nullptr);

} // namespace dagscore

#endif
