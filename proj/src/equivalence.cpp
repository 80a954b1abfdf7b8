#include "dagscore/equivalence.hpp"

#include <algorithm>

namespace dagscore {

namespace {

void require_dag(const MixedGraph& graph) {
    if (!graph.is_dag()) {
        throw Error(ErrorKind::NotADag, "operation requires a DAG");
    }
}

using PairMark = MixedGraph::PairMark;

bool directed_from(const MixedGraph& g, int tail, int head) {
    return g.has_arc(tail, head);
}

bool undirected_between(const MixedGraph& g, int i, int j) {
    PairMark m;
    return g.pair_mark(i, j, &m) && m == PairMark::Undirected;
}

// One Meek rule pass target: should the undirected edge u-v become u->v?
// R1: w->u, u-v, w and v non-adjacent.
bool rule1(const MixedGraph& g, int u, int v) {
    int n = g.node_count();
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (directed_from(g, w, u) && !g.adjacent(w, v)) return true;
    }
    return false;
}

// R2: u->w->v with u-v.
bool rule2(const MixedGraph& g, int u, int v) {
    int n = g.node_count();
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (directed_from(g, u, w) && directed_from(g, w, v)) return true;
    }
    return false;
}

// R3: u-v, u-c, u-d, c->v, d->v, c and d non-adjacent.
bool rule3(const MixedGraph& g, int u, int v) {
    int n = g.node_count();
    for (int c = 0; c < n; ++c) {
        if (c == u || c == v) continue;
        if (!undirected_between(g, u, c) || !directed_from(g, c, v)) continue;
        for (int d = c + 1; d < n; ++d) {
            if (d == u || d == v) continue;
            if (!undirected_between(g, u, d) || !directed_from(g, d, v)) continue;
            if (!g.adjacent(c, d)) return true;
        }
    }
    return false;
}

// R4: u-v, c->d, d->v, c and v non-adjacent, u adjacent to both c and d.
bool rule4(const MixedGraph& g, int u, int v) {
    int n = g.node_count();
    for (int d = 0; d < n; ++d) {
        if (d == u || d == v) continue;
        if (!directed_from(g, d, v) || !g.adjacent(u, d)) continue;
        for (int c = 0; c < n; ++c) {
            if (c == u || c == v || c == d) continue;
            if (!directed_from(g, c, d)) continue;
            if (g.adjacent(c, v)) continue;
            if (g.adjacent(u, c)) return true;
        }
    }
    return false;
}

} // namespace

Skeleton skeleton(const MixedGraph& dag) {
    require_dag(dag);
    Skeleton result;
    result.nodes = dag.node_labels();
    const auto& labels = dag.node_labels();
    for (const auto& [pair, mark] : dag.pairs()) {
        (void)mark;
        std::string a = labels[pair.first];
        std::string b = labels[pair.second];
        if (b < a) std::swap(a, b);
        result.adjacencies.emplace(a, b);
    }
    return result;
}

std::set<VStructure> v_structures(const MixedGraph& dag) {
    require_dag(dag);
    std::set<VStructure> result;
    const auto& labels = dag.node_labels();
    int n = dag.node_count();
    for (int c = 0; c < n; ++c) {
        std::vector<int> parents;
        for (int p = 0; p < n; ++p) {
            if (p != c && dag.has_arc(p, c)) parents.push_back(p);
        }
        for (std::size_t x = 0; x < parents.size(); ++x) {
            for (std::size_t y = x + 1; y < parents.size(); ++y) {
                if (dag.adjacent(parents[x], parents[y])) continue;
                std::string pa = labels[parents[x]];
                std::string pb = labels[parents[y]];
                if (pb < pa) std::swap(pa, pb);
                result.insert(VStructure{labels[c], pa, pb});
            }
        }
    }
    return result;
}

bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2) {
    check_aligned(g1, g2);
    if (skeleton(g1) != skeleton(g2)) return false;
    return v_structures(g1) == v_structures(g2);
}

MixedGraph meek_closure(const MixedGraph& pdag) {
    for (const auto& [pair, mark] : pdag.pairs()) {
        (void)pair;
        if (mark == PairMark::Bidirected) {
            throw Error(ErrorKind::NotAPdag, "meek closure requires directed or undirected marks");
        }
    }
    MixedGraph g = pdag;
    bool changed = true;
    while (changed) {
        changed = false;
        // Snapshot the undirected pairs; orientations made during the scan
        // take effect for subsequent pairs.
        std::vector<std::pair<int, int>> undirected;
        for (const auto& [pair, mark] : g.pairs()) {
            if (mark == PairMark::Undirected) undirected.push_back(pair);
        }
        for (const auto& [i, j] : undirected) {
            PairMark current;
            if (!g.pair_mark(i, j, &current) || current != PairMark::Undirected) continue;
            bool forward = rule1(g, i, j) || rule2(g, i, j) || rule3(g, i, j) || rule4(g, i, j);
            if (forward) {
                g.set_pair(i, j, PairMark::Forward);
                changed = true;
                continue;
            }
            bool backward = rule1(g, j, i) || rule2(g, j, i) || rule3(g, j, i) || rule4(g, j, i);
            if (backward) {
                g.set_pair(j, i, PairMark::Forward);
                changed = true;
            }
        }
    }
    return g;
}

MixedGraph cpdag_of(const MixedGraph& dag) {
    require_dag(dag);
    MixedGraph pattern(dag.node_labels());
    for (const auto& [pair, mark] : dag.pairs()) {
        (void)mark;
        pattern.set_pair(pair.first, pair.second, PairMark::Undirected);
    }
    for (const auto& vs : v_structures(dag)) {
        pattern.add_arc(vs.parent_a, vs.collider);
        pattern.add_arc(vs.parent_b, vs.collider);
    }
    return meek_closure(pattern);
}

bool compelled(const MixedGraph& dag, const std::string& a, const std::string& b) {
    require_dag(dag);
    EdgeMark mark = dag.edge_between(a, b);
    if (!mark.is_directed()) {
        throw Error(ErrorKind::NoSuchArc, "no arc between '" + a + "' and '" + b + "'");
    }
    MixedGraph cpdag = cpdag_of(dag);
    return cpdag.edge_between(a, b).is_directed();
}

} // namespace dagscore
