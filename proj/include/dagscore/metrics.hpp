#ifndef DAGSCORE_METRICS_HPP
#define DAGSCORE_METRICS_HPP

#include "dagscore/confusion.hpp"

namespace dagscore {

// A metric value that may be undefined (rendered "n/a" in reports) instead
// of carrying a sentinel number.
class Score {
public:
    enum class Undefined { NoLearntEdges, ZeroDenominator };

    static Score defined(double value) { return Score(value); }
    static Score undefined(Undefined reason) { return Score(reason); }

    bool is_defined() const { return defined_; }
    double value() const; // throws OutOfRange when undefined
    Undefined reason() const;

    bool operator==(const Score& other) const;

private:
    explicit Score(double value) : defined_(true), value_(value) {}
    explicit Score(Undefined reason) : defined_(false), reason_(reason) {}

    bool defined_;
    double value_ = 0.0;
    Undefined reason_ = Undefined::ZeroDenominator;
};

enum class ShdWeighting { Classic, Weighted };

struct MetricScores {
    Score pr = Score::undefined(Score::Undefined::NoLearntEdges);
    Score re = Score::undefined(Score::Undefined::ZeroDenominator);
    Score f1 = Score::undefined(Score::Undefined::ZeroDenominator);
    double shd_classic = 0.0;
    double shd_weighted = 0.0;
    double ddm = 0.0;
    double bsf = 0.0;
};

// Correct discoveries over all learnt edges; partial matches count half in
// the numerator and whole in the denominator.
Score precision(const EffectiveCounts& e);

// Correct discoveries over the a true arcs.
Score recall(const EffectiveCounts& e, const GroundTruthStats& s);

// Harmonic mean; undefined when an input is undefined or both are zero.
Score f1(const Score& pr, const Score& re);

// Classic: one point per insertion, deletion or reversal. Weighted: a
// reversal (partial match) costs 0.5.
double shd(const ConfusionTally& t, ShdWeighting weighting);

// (TP_eff - FN_eff - FP) / a; 1 means perfect agreement, unbounded below.
double ddm(const EffectiveCounts& e, const GroundTruthStats& s);

// Balanced scoring function (TP/a + TN/i - FP/i - FN/a) / 2 on effective
// counts; ranges over [-1, 1] with 0 the empty/fully-connected baseline.
double bsf(const EffectiveCounts& e, const GroundTruthStats& s);

MetricScores scores_from_tally(const ConfusionTally& t, const GroundTruthStats& s);
MetricScores score_all(const MixedGraph& true_graph, const MixedGraph& learnt_graph,
                       EvaluationMode mode);

} // namespace dagscore

#endif
