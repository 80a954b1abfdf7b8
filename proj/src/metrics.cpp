#include "dagscore/metrics.hpp"

namespace dagscore {

double Score::value() const {
    if (!defined_) {
        throw Error(ErrorKind::OutOfRange, "score is undefined");
    }
    return value_;
}

Score::Undefined Score::reason() const {
    if (defined_) {
        throw Error(ErrorKind::OutOfRange, "score is defined");
    }
    return reason_;
}

bool Score::operator==(const Score& other) const {
    if (defined_ != other.defined_) return false;
    return defined_ ? value_ == other.value_ : reason_ == other.reason_;
}

Score precision(const EffectiveCounts& e) {
    if (e.learnt_edges == 0) {
        return Score::undefined(Score::Undefined::NoLearntEdges);
    }
    return Score::defined(e.tp_eff() / static_cast<double>(e.learnt_edges));
}

Score recall(const EffectiveCounts& e, const GroundTruthStats& s) {
    return Score::defined(e.tp_eff() / static_cast<double>(s.a));
}

Score f1(const Score& pr, const Score& re) {
    if (!pr.is_defined()) return Score::undefined(pr.reason());
    if (!re.is_defined()) return Score::undefined(re.reason());
    double p = pr.value();
    double r = re.value();
    if (p + r == 0.0) {
        return Score::undefined(Score::Undefined::ZeroDenominator);
    }
    return Score::defined(2.0 * p * r / (p + r));
}

double shd(const ConfusionTally& t, ShdWeighting weighting) {
    double base = static_cast<double>(t.fp + t.fn_hard);
    if (weighting == ShdWeighting::Classic) {
        return base + static_cast<double>(t.tp_partial);
    }
    return base + static_cast<double>(t.tp_partial) / 2.0;
}

double ddm(const EffectiveCounts& e, const GroundTruthStats& s) {
    return (e.tp_eff() - e.fn_eff() - static_cast<double>(e.fp)) / static_cast<double>(s.a);
}

double bsf(const EffectiveCounts& e, const GroundTruthStats& s) {
    double a = static_cast<double>(s.a);
    double i = static_cast<double>(s.i);
    return (e.tp_eff() / a + static_cast<double>(e.tn) / i - static_cast<double>(e.fp) / i -
            e.fn_eff() / a) /
           2.0;
}

MetricScores scores_from_tally(const ConfusionTally& t, const GroundTruthStats& s) {
    EffectiveCounts e = effective_counts(t);
    MetricScores m;
    m.pr = precision(e);
    m.re = recall(e, s);
    m.f1 = f1(m.pr, m.re);
    m.shd_classic = shd(t, ShdWeighting::Classic);
    m.shd_weighted = shd(t, ShdWeighting::Weighted);
    m.ddm = ddm(e, s);
    m.bsf = bsf(e, s);
    return m;
}

MetricScores score_all(const MixedGraph& true_graph, const MixedGraph& learnt_graph,
                       EvaluationMode mode) {
    GroundTruthStats stats = ground_truth_stats(true_graph);
    ConfusionTally t = tally(true_graph, learnt_graph, mode);
    return scores_from_tally(t, stats);
}

} // namespace dagscore
