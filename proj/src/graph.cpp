#include "dagscore/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dagscore {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::EmptyNodeSet: return "EmptyNodeSet";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NodeSetMismatch: return "NodeSetMismatch";
    case ErrorKind::NotADag: return "NotADag";
    case ErrorKind::NotAPdag: return "NotAPdag";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownNodeInEdge: return "UnknownNodeInEdge";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::MissingNodesHeader: return "MissingNodesHeader";
    case ErrorKind::DuplicateGroupId: return "DuplicateGroupId";
    case ErrorKind::EmptyGroup: return "EmptyGroup";
    case ErrorKind::DegenerateTruth: return "DegenerateTruth";
    case ErrorKind::InvalidTrueMark: return "InvalidTrueMark";
    case ErrorKind::NoSuchArc: return "NoSuchArc";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownMetric: return "UnknownMetric";
    case ErrorKind::InfeasiblePlan: return "InfeasiblePlan";
    case ErrorKind::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

bool valid_node_label(const std::string& label) {
    if (label.empty()) return false;
    for (char c : label) {
        if (c == ',' || c == '#') return false;
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    // Edge operator tokens would make the text format ambiguous.
    return label != "->" && label != "<-" && label != "--" && label != "<->";
}

EdgeMark EdgeMark::directed(std::string tail, std::string head) {
    EdgeMark mark(Kind::Directed);
    mark.tail_ = std::move(tail);
    mark.head_ = std::move(head);
    return mark;
}

bool EdgeMark::operator==(const EdgeMark& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == Kind::Directed) return tail_ == other.tail_ && head_ == other.head_;
    return true;
}

MixedGraph::MixedGraph(std::vector<std::string> node_labels) : labels_(std::move(node_labels)) {
    if (labels_.empty()) {
        throw Error(ErrorKind::EmptyNodeSet, "graph requires at least one node");
    }
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        const std::string& label = labels_[i];
        if (!valid_node_label(label)) {
            throw Error(ErrorKind::InvalidLabel, "invalid node label '" + label + "'");
        }
        if (!index_.emplace(label, i).second) {
            throw Error(ErrorKind::DuplicateNode, "duplicate node label '" + label + "'");
        }
    }
}

int MixedGraph::node_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw Error(ErrorKind::UnknownNode, "unknown node '" + label + "'");
    }
    return it->second;
}

void MixedGraph::set_edge(const std::string& a, const std::string& b, const EdgeMark& mark) {
    int ia = node_index(a);
    int ib = node_index(b);
    if (ia == ib) {
        throw Error(ErrorKind::SelfLoop, "self loop on node '" + a + "'");
    }
    int lo = std::min(ia, ib);
    int hi = std::max(ia, ib);
    switch (mark.kind()) {
    case EdgeMark::Kind::Absent:
        marks_.erase({lo, hi});
        return;
    case EdgeMark::Kind::Undirected:
        marks_[{lo, hi}] = PairMark::Undirected;
        return;
    case EdgeMark::Kind::Bidirected:
        marks_[{lo, hi}] = PairMark::Bidirected;
        return;
    case EdgeMark::Kind::Directed: {
        int tail = node_index(mark.tail());
        int head = node_index(mark.head());
        if (!((tail == ia && head == ib) || (tail == ib && head == ia))) {
            throw Error(ErrorKind::UnknownNode,
                        "directed mark endpoints do not match pair {" + a + "," + b + "}");
        }
        marks_[{lo, hi}] = (tail == lo) ? PairMark::Forward : PairMark::Backward;
        return;
    }
    }
}

void MixedGraph::add_arc(const std::string& tail, const std::string& head) {
    set_edge(tail, head, EdgeMark::directed(tail, head));
}

void MixedGraph::add_undirected(const std::string& a, const std::string& b) {
    set_edge(a, b, EdgeMark::undirected());
}

void MixedGraph::add_bidirected(const std::string& a, const std::string& b) {
    set_edge(a, b, EdgeMark::bidirected());
}

void MixedGraph::clear_edge(const std::string& a, const std::string& b) {
    set_edge(a, b, EdgeMark::absent());
}

EdgeMark MixedGraph::edge_between(const std::string& a, const std::string& b) const {
    int ia = node_index(a);
    int ib = node_index(b);
    if (ia == ib) {
        throw Error(ErrorKind::SelfLoop, "self pair on node '" + a + "'");
    }
    int lo = std::min(ia, ib);
    int hi = std::max(ia, ib);
    auto it = marks_.find({lo, hi});
    if (it == marks_.end()) return EdgeMark::absent();
    switch (it->second) {
    case PairMark::Undirected: return EdgeMark::undirected();
    case PairMark::Bidirected: return EdgeMark::bidirected();
    case PairMark::Forward: return EdgeMark::directed(labels_[lo], labels_[hi]);
    case PairMark::Backward: return EdgeMark::directed(labels_[hi], labels_[lo]);
    }
    return EdgeMark::absent();
}

void MixedGraph::set_pair(int i, int j, PairMark mark) {
    if (i == j) throw Error(ErrorKind::SelfLoop, "self pair");
    if (i > j) {
        // Directed marks are stored relative to (lo, hi).
        if (mark == PairMark::Forward) mark = PairMark::Backward;
        else if (mark == PairMark::Backward) mark = PairMark::Forward;
        std::swap(i, j);
    }
    marks_[{i, j}] = mark;
}

void MixedGraph::clear_pair(int i, int j) {
    if (i > j) std::swap(i, j);
    marks_.erase({i, j});
}

bool MixedGraph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return marks_.count({i, j}) != 0;
}

bool MixedGraph::pair_mark(int i, int j, PairMark* mark) const {
    bool swapped = i > j;
    if (swapped) std::swap(i, j);
    auto it = marks_.find({i, j});
    if (it == marks_.end()) return false;
    PairMark m = it->second;
    if (swapped) {
        if (m == PairMark::Forward) m = PairMark::Backward;
        else if (m == PairMark::Backward) m = PairMark::Forward;
    }
    if (mark) *mark = m;
    return true;
}

bool MixedGraph::has_arc(int tail, int head) const {
    PairMark m;
    if (!pair_mark(tail, head, &m)) return false;
    return m == PairMark::Forward;
}

int MixedGraph::arc_count() const {
    int count = 0;
    for (const auto& [pair, mark] : marks_) {
        (void)pair;
        if (mark == PairMark::Forward || mark == PairMark::Backward) ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> MixedGraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    for (const auto& [pair, mark] : marks_) {
        if (mark == PairMark::Forward) result.emplace_back(pair.first, pair.second);
        else if (mark == PairMark::Backward) result.emplace_back(pair.second, pair.first);
    }
    return result;
}

bool MixedGraph::is_dag() const {
    for (const auto& [pair, mark] : marks_) {
        (void)pair;
        if (mark == PairMark::Undirected || mark == PairMark::Bidirected) return false;
    }
    // Kahn's algorithm over the directed relation.
    int n = node_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> children(n);
    for (const auto& [tail, head] : arcs()) {
        children[tail].push_back(head);
        ++indegree[head];
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int child : children[v]) {
            if (--indegree[child] == 0) ready.push_back(child);
        }
    }
    return removed == n;
}

std::vector<int> MixedGraph::topological_order() const {
    if (!is_dag()) {
        throw Error(ErrorKind::NotADag, "graph is not a DAG");
    }
    int n = node_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> children(n);
    for (const auto& [tail, head] : arcs()) {
        children[tail].push_back(head);
        ++indegree[head];
    }
    // Smallest index first so the order is deterministic.
    std::set<int> ready;
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.insert(v);
    }
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int child : children[v]) {
            if (--indegree[child] == 0) ready.insert(child);
        }
    }
    return order;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
    return labels_ == other.labels_ && marks_ == other.marks_;
}

GraphKind classify(const MixedGraph& graph) {
    bool all_directed = true;
    bool pdag_marks = true;
    for (const auto& [pair, mark] : graph.pairs()) {
        (void)pair;
        if (mark == MixedGraph::PairMark::Undirected) all_directed = false;
        else if (mark == MixedGraph::PairMark::Bidirected) {
            all_directed = false;
            pdag_marks = false;
        }
    }
    if (all_directed && graph.is_dag()) return GraphKind::Dag;
    if (pdag_marks) return GraphKind::Pdag;
    return GraphKind::Mixed;
}

long long max_edges(long long n) {
    if (n < 1) {
        throw Error(ErrorKind::OutOfRange, "node count must be at least 1");
    }
    return n * (n - 1) / 2;
}

void check_aligned(const MixedGraph& true_graph, const MixedGraph& learnt_graph) {
    std::set<std::string> left(true_graph.node_labels().begin(), true_graph.node_labels().end());
    std::set<std::string> right(learnt_graph.node_labels().begin(), learnt_graph.node_labels().end());
    if (left == right) return;
    std::vector<std::string> diff;
    std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(),
                                  std::back_inserter(diff));
    std::ostringstream msg;
    msg << "node sets differ; symmetric difference {";
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (i) msg << ",";
        msg << diff[i];
    }
    msg << "}";
    throw Error(ErrorKind::NodeSetMismatch, msg.str());
}

} // namespace dagscore
