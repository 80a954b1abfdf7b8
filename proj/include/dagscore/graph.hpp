#ifndef DAGSCORE_GRAPH_HPP
#define DAGSCORE_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dagscore/error.hpp"

namespace dagscore {

// Mark on one unordered node pair. Directed carries the orientation; the
// other variants are symmetric.
class EdgeMark {
public:
    enum class Kind : std::uint8_t { Absent, Directed, Undirected, Bidirected };

    EdgeMark() : kind_(Kind::Absent) {}

    static EdgeMark absent() { return EdgeMark(); }
    static EdgeMark directed(std::string tail, std::string head);
    static EdgeMark undirected() { return EdgeMark(Kind::Undirected); }
    static EdgeMark bidirected() { return EdgeMark(Kind::Bidirected); }

    Kind kind() const { return kind_; }
    bool is_absent() const { return kind_ == Kind::Absent; }
    bool is_directed() const { return kind_ == Kind::Directed; }

    // Valid only for Directed marks.
    const std::string& tail() const { return tail_; }
    const std::string& head() const { return head_; }

    bool operator==(const EdgeMark& other) const;
    bool operator!=(const EdgeMark& other) const { return !(*this == other); }

private:
    explicit EdgeMark(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::string tail_;
    std::string head_;
};

enum class GraphKind { Dag, Pdag, Mixed };

// Node set plus one mark per unordered pair; absent pairs are not stored.
// Value type: copy freely, no hidden sharing.
class MixedGraph {
public:
    // Internal mark, relative to the canonical (lo, hi) index pair.
    enum class PairMark : std::uint8_t { Forward, Backward, Undirected, Bidirected };

    explicit MixedGraph(std::vector<std::string> node_labels);

    int node_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& node_labels() const { return labels_; }
    bool has_node(const std::string& label) const { return index_.count(label) != 0; }
    int node_index(const std::string& label) const; // throws UnknownNode

    void set_edge(const std::string& a, const std::string& b, const EdgeMark& mark);
    void add_arc(const std::string& tail, const std::string& head);
    void add_undirected(const std::string& a, const std::string& b);
    void add_bidirected(const std::string& a, const std::string& b);
    void clear_edge(const std::string& a, const std::string& b);

    EdgeMark edge_between(const std::string& a, const std::string& b) const;

    // Index-based access used by the scoring and equivalence loops.
    void set_pair(int i, int j, PairMark mark);
    void clear_pair(int i, int j);
    bool adjacent(int i, int j) const;
    // Returns true and fills `mark` when the pair is present.
    bool pair_mark(int i, int j, PairMark* mark) const;
    bool has_arc(int tail, int head) const;

    int edge_count() const { return static_cast<int>(marks_.size()); }
    int arc_count() const;

    // Directed edges as (tail, head) index pairs, ordered by (lo, hi).
    std::vector<std::pair<int, int>> arcs() const;
    // All stored pairs as ((lo, hi), mark), ordered by (lo, hi).
    const std::map<std::pair<int, int>, PairMark>& pairs() const { return marks_; }

    bool is_dag() const;
    // Kahn's algorithm, smallest node index first; throws NotADag on cycles
    // or non-directed marks.
    std::vector<int> topological_order() const;

    bool operator==(const MixedGraph& other) const;
    bool operator!=(const MixedGraph& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::map<std::pair<int, int>, PairMark> marks_;
};

GraphKind classify(const MixedGraph& graph);

// j = n(n-1)/2, the number of unordered node pairs.
long long max_edges(long long n);

// Throws NodeSetMismatch listing the symmetric difference. Order-insensitive.
void check_aligned(const MixedGraph& true_graph, const MixedGraph& learnt_graph);

bool valid_node_label(const std::string& label);

} // namespace dagscore

#endif
