#include "dagscore/confusion.hpp"

#include "dagscore/equivalence.hpp"

namespace dagscore {

GroundTruthStats ground_truth_stats(const MixedGraph& true_graph) {
    if (!true_graph.is_dag()) {
        throw Error(ErrorKind::NotADag, "ground truth must be a DAG");
    }
    GroundTruthStats stats;
    stats.a = true_graph.arc_count();
    stats.j = max_edges(true_graph.node_count());
    stats.i = stats.j - stats.a;
    if (stats.a == 0 || stats.i == 0) {
        throw Error(ErrorKind::DegenerateTruth,
                    "ground truth needs at least one arc and one independency (a=" +
                        std::to_string(stats.a) + ", i=" + std::to_string(stats.i) + ")");
    }
    stats.w_a = 1.0 / static_cast<double>(stats.a);
    stats.w_i = 1.0 / static_cast<double>(stats.i);
    return stats;
}

PairClass classify_pair(const EdgeMark& true_mark, const EdgeMark& learnt_mark, bool rule6) {
    switch (true_mark.kind()) {
    case EdgeMark::Kind::Directed:
        if (learnt_mark.is_absent()) return PairClass::NoMatch;
        if (learnt_mark.is_directed() && learnt_mark.tail() == true_mark.tail() &&
            learnt_mark.head() == true_mark.head()) {
            return PairClass::CompleteMatch;
        }
        // Reversed arc, undirected or bidirected edge.
        return rule6 ? PairClass::CompleteMatch : PairClass::PartialMatch;
    case EdgeMark::Kind::Absent:
        return learnt_mark.is_absent() ? PairClass::TrueIndependence : PairClass::FalseDependence;
    default:
        throw Error(ErrorKind::InvalidTrueMark,
                    "ground truth marks must be directed or absent");
    }
}

TruthContext make_truth_context(const MixedGraph& true_graph, EvaluationMode mode) {
    if (!true_graph.is_dag()) {
        throw Error(ErrorKind::NotADag, "ground truth must be a DAG");
    }
    TruthContext ctx{true_graph, std::nullopt, mode};
    if (mode == EvaluationMode::EquivalenceAware) {
        ctx.cpdag = cpdag_of(true_graph);
    }
    return ctx;
}

ConfusionTally tally(const TruthContext& truth, const MixedGraph& learnt_graph) {
    check_aligned(truth.graph, learnt_graph);
    const auto& labels = truth.graph.node_labels();
    ConfusionTally counts;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            EdgeMark true_mark = truth.graph.edge_between(labels[i], labels[j]);
            EdgeMark learnt_mark = learnt_graph.edge_between(labels[i], labels[j]);
            bool rule6 = false;
            if (truth.cpdag && true_mark.is_directed()) {
                // Reversible arc: any learnt orientation is equally valid.
                rule6 = !truth.cpdag->edge_between(labels[i], labels[j]).is_directed();
            }
            switch (classify_pair(true_mark, learnt_mark, rule6)) {
            case PairClass::CompleteMatch: ++counts.tp; break;
            case PairClass::PartialMatch: ++counts.tp_partial; break;
            case PairClass::NoMatch: ++counts.fn_hard; break;
            case PairClass::TrueIndependence: ++counts.tn; break;
            case PairClass::FalseDependence: ++counts.fp; break;
            }
        }
    }
    return counts;
}

ConfusionTally tally(const MixedGraph& true_graph, const MixedGraph& learnt_graph,
                     EvaluationMode mode) {
    return tally(make_truth_context(true_graph, mode), learnt_graph);
}

EffectiveCounts effective_counts(const ConfusionTally& t) {
    EffectiveCounts e;
    e.tp_eff_x2 = 2 * t.tp + t.tp_partial;
    e.fn_eff_x2 = 2 * t.fn_hard + t.tp_partial;
    e.fp = t.fp;
    e.tn = t.tn;
    e.learnt_edges = t.tp + t.tp_partial + t.fp;
    return e;
}

} // namespace dagscore
