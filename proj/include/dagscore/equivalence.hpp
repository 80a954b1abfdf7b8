#ifndef DAGSCORE_EQUIVALENCE_HPP
#define DAGSCORE_EQUIVALENCE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagscore/graph.hpp"

namespace dagscore {

// Undirected adjacency structure, label-keyed so graphs with different node
// orderings compare directly.
struct Skeleton {
    std::vector<std::string> nodes;
    std::set<std::pair<std::string, std::string>> adjacencies; // (lo, hi) by label

    bool operator==(const Skeleton& other) const { return adjacencies == other.adjacencies; }
};

// Unshielded collider parent_a -> collider <- parent_b with the parents
// non-adjacent; parent_a < parent_b.
struct VStructure {
    std::string collider;
    std::string parent_a;
    std::string parent_b;

    auto operator<=>(const VStructure&) const = default;
};

Skeleton skeleton(const MixedGraph& dag);
std::set<VStructure> v_structures(const MixedGraph& dag);

// Verma-Pearl criterion: equal skeletons and equal v-structure sets.
bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2);

// Applies Meek rules R1-R4 to a PDAG until no rule fires. Never removes or
// reverses a directed mark; scan order is lexicographic by pair so the
// sequence of orientations is reproducible.
MixedGraph meek_closure(const MixedGraph& pdag);

// CPDAG of the DAG's Markov equivalence class: compelled arcs directed,
// reversible edges undirected.
MixedGraph cpdag_of(const MixedGraph& dag);

// True iff the arc on {a, b} keeps its orientation across the whole
// equivalence class. Throws NoSuchArc when the pair carries no directed mark.
bool compelled(const MixedGraph& dag, const std::string& a, const std::string& b);

} // namespace dagscore

#endif
