#ifndef DAGSCORE_CONFUSION_HPP
#define DAGSCORE_CONFUSION_HPP

#include <cstdint>
#include <optional>

#include "dagscore/graph.hpp"

namespace dagscore {

// Prevalence statistics of one ground-truth DAG: a true arcs, i true direct
// independencies, j = a + i unordered pairs.
struct GroundTruthStats {
    long long a = 0;
    long long i = 0;
    long long j = 0;
    double w_a = 0.0; // 1/a
    double w_i = 0.0; // 1/i
};

enum class PairClass {
    CompleteMatch,
    PartialMatch,
    NoMatch,
    TrueIndependence,
    FalseDependence,
};

// Raw pair-classification counts for one (truth, learnt) pair.
struct ConfusionTally {
    long long tp = 0;         // complete matches
    long long tp_partial = 0; // dependency found, orientation wrong or missing
    long long fp = 0;
    long long tn = 0;
    long long fn_hard = 0;    // true arcs entirely missed

    bool operator==(const ConfusionTally&) const = default;
};

// Tally with partial matches split half/half between TP and FN. Halves are
// kept as doubled integers so table reproduction stays exact.
struct EffectiveCounts {
    long long tp_eff_x2 = 0;
    long long fn_eff_x2 = 0;
    long long fp = 0;
    long long tn = 0;
    long long learnt_edges = 0; // tp + tp_partial + fp

    double tp_eff() const { return static_cast<double>(tp_eff_x2) / 2.0; }
    double fn_eff() const { return static_cast<double>(fn_eff_x2) / 2.0; }
};

enum class EvaluationMode { StrictDag, EquivalenceAware };

// Throws DegenerateTruth when a = 0 or i = 0 (the prevalence weights would
// be undefined) and NotADag otherwise.
GroundTruthStats ground_truth_stats(const MixedGraph& true_graph);

// Penalty-rule classification of one pair. `rule6` marks a reversible true
// arc: any learnt edge on the pair then counts as a complete match.
PairClass classify_pair(const EdgeMark& true_mark, const EdgeMark& learnt_mark, bool rule6);

// Precomputed per-truth state shared across many learnt graphs.
struct TruthContext {
    MixedGraph graph;
    std::optional<MixedGraph> cpdag; // present in EquivalenceAware mode
    EvaluationMode mode = EvaluationMode::StrictDag;
};

TruthContext make_truth_context(const MixedGraph& true_graph, EvaluationMode mode);

ConfusionTally tally(const TruthContext& truth, const MixedGraph& learnt_graph);
ConfusionTally tally(const MixedGraph& true_graph, const MixedGraph& learnt_graph,
                     EvaluationMode mode);

EffectiveCounts effective_counts(const ConfusionTally& t);

} // namespace dagscore

#endif
