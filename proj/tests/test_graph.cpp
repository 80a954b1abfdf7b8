#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "dagscore/graph.hpp"

using namespace dagscore;

namespace {

MixedGraph chain3() {
    MixedGraph g({"A", "B", "C"});
    g.add_arc("A", "B");
    g.add_arc("B", "C");
    return g;
}

// Independent cycle check: depth-first search with colors.
bool dfs_has_cycle(const MixedGraph& g) {
    int n = g.node_count();
    std::vector<int> color(n, 0); // 0 white, 1 grey, 2 black
    std::vector<std::vector<int>> children(n);
    for (const auto& [tail, head] : g.arcs()) children[tail].push_back(head);
    std::function<bool(int)> visit = [&](int v) {
        color[v] = 1;
        for (int c : children[v]) {
            if (color[c] == 1) return true;
            if (color[c] == 0 && visit(c)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (color[v] == 0 && visit(v)) return true;
    }
    return false;
}

MixedGraph random_directed_graph(int n, double density, std::mt19937& gen) {
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("N" + std::to_string(k));
    MixedGraph g(labels);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (unit(gen) >= density) continue;
            bool forward = unit(gen) < 0.5;
            g.set_pair(i, j, forward ? MixedGraph::PairMark::Forward
                                     : MixedGraph::PairMark::Backward);
        }
    }
    return g;
}

} // namespace

TEST_CASE("new graph starts with all pairs absent") {
    MixedGraph g({"A", "B", "C"});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 0);
    CHECK(g.edge_between("A", "B").is_absent());
    CHECK(g.edge_between("A", "C").is_absent());
    CHECK(g.edge_between("B", "C").is_absent());
}

TEST_CASE("node set validation") {
    CHECK_THROWS_WITH_AS(MixedGraph({"A", "A"}), doctest::Contains("duplicate"), Error);
    try {
        MixedGraph g({"A", "A"});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateNode);
    }
    CHECK_THROWS_AS(MixedGraph({}), Error);
    try {
        MixedGraph g(std::vector<std::string>{});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyNodeSet);
    }
    for (std::string bad : {"", "a,b", "a b", " a", "a ", "->", "has#hash"}) {
        try {
            MixedGraph g({bad});
            FAIL("label accepted: '" << bad << "'");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidLabel);
        }
    }
}

TEST_CASE("set_edge round trips every mark variant") {
    MixedGraph g({"A", "B"});

    g.set_edge("A", "B", EdgeMark::directed("A", "B"));
    CHECK(g.edge_between("A", "B") == EdgeMark::directed("A", "B"));
    CHECK(g.edge_between("B", "A") == EdgeMark::directed("A", "B"));

    g.set_edge("A", "B", EdgeMark::undirected());
    CHECK(g.edge_between("A", "B") == EdgeMark::undirected());

    g.set_edge("A", "B", EdgeMark::bidirected());
    CHECK(g.edge_between("B", "A") == EdgeMark::bidirected());

    g.set_edge("A", "B", EdgeMark::absent());
    CHECK(g.edge_between("A", "B").is_absent());
    CHECK(g.edge_count() == 0);
}

TEST_CASE("writing a reversed arc replaces, never merges") {
    MixedGraph g({"A", "B"});
    g.add_arc("A", "B");
    g.add_arc("B", "A");
    CHECK(g.edge_between("A", "B") == EdgeMark::directed("B", "A"));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("self loops and unknown nodes are rejected") {
    MixedGraph g({"A", "B"});
    CHECK_THROWS_AS(g.add_arc("A", "A"), Error);
    try {
        g.add_arc("A", "A");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SelfLoop);
    }
    try {
        g.edge_between("A", "Z");
        FAIL("unknown node accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownNode);
    }
}

TEST_CASE("is_dag accepts chains and rejects cycles and undirected marks") {
    CHECK(chain3().is_dag());

    MixedGraph cycle({"A", "B", "C"});
    cycle.add_arc("A", "B");
    cycle.add_arc("B", "C");
    cycle.add_arc("C", "A");
    CHECK_FALSE(cycle.is_dag());

    MixedGraph undirected({"A", "B"});
    undirected.add_undirected("A", "B");
    CHECK_FALSE(undirected.is_dag());

    MixedGraph isolated({"A", "B", "C"});
    CHECK(isolated.is_dag());
}

TEST_CASE("max_edges matches the pair enumeration") {
    CHECK(max_edges(10) == 45);
    CHECK(max_edges(1) == 0);
    CHECK(max_edges(4) == 6);
    for (int n = 1; n <= 50; ++n) {
        long long pairs = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) ++pairs;
        }
        CHECK(max_edges(n) == pairs);
    }
    CHECK_THROWS_AS(max_edges(0), Error);
}

TEST_CASE("check_aligned is order-insensitive and reports the difference") {
    MixedGraph g1({"A", "B", "C"});
    MixedGraph g2({"C", "A", "B"});
    CHECK_NOTHROW(check_aligned(g1, g2));

    MixedGraph g3({"A", "B"});
    MixedGraph g4({"A", "C"});
    try {
        check_aligned(g3, g4);
        FAIL("mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NodeSetMismatch);
        CHECK(std::string(e.what()).find("B") != std::string::npos);
        CHECK(std::string(e.what()).find("C") != std::string::npos);
    }
}

TEST_CASE("is_dag is invariant under node relabeling") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(gen() % 8);
        MixedGraph g = random_directed_graph(n, 0.4, gen);

        // Apply a random bijection to the labels.
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<std::string> new_labels(n);
        for (int k = 0; k < n; ++k) new_labels[k] = "R" + std::to_string(perm[k]);
        MixedGraph relabeled(new_labels);
        for (const auto& [tail, head] : g.arcs()) {
            relabeled.add_arc(new_labels[tail], new_labels[head]);
        }
        CHECK(g.is_dag() == relabeled.is_dag());
    }
}

TEST_CASE("Kahn and DFS cycle detection agree on random graphs") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(gen() % 11);
        MixedGraph g = random_directed_graph(n, 0.35, gen);
        CHECK(g.is_dag() == !dfs_has_cycle(g));
    }
}

TEST_CASE("topological order is consistent and deterministic") {
    MixedGraph g({"C", "A", "B"});
    g.add_arc("C", "A");
    g.add_arc("A", "B");
    auto order = g.topological_order();
    std::vector<int> position(g.node_count());
    for (int k = 0; k < g.node_count(); ++k) position[order[k]] = k;
    for (const auto& [tail, head] : g.arcs()) {
        CHECK(position[tail] < position[head]);
    }
    CHECK(g.topological_order() == order);

    MixedGraph cyc({"A", "B"});
    cyc.add_arc("A", "B");
    cyc.add_arc("B", "A");
    CHECK(cyc.edge_count() == 1); // replacement, not a cycle
    MixedGraph undirected({"A", "B"});
    undirected.add_undirected("A", "B");
    CHECK_THROWS_AS(undirected.topological_order(), Error);
}

TEST_CASE("classify distinguishes dag, pdag and mixed") {
    CHECK(classify(chain3()) == GraphKind::Dag);

    MixedGraph pdag({"A", "B", "C"});
    pdag.add_arc("A", "B");
    pdag.add_undirected("B", "C");
    CHECK(classify(pdag) == GraphKind::Pdag);

    MixedGraph mixed({"A", "B"});
    mixed.add_bidirected("A", "B");
    CHECK(classify(mixed) == GraphKind::Mixed);
}
