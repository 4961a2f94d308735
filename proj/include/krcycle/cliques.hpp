#pragma once

#include <utility>
#include <vector>

#include "krcycle/graph.hpp"
#include "krcycle/hypergraph.hpp"
#include "krcycle/pattern.hpp"

namespace krcycle {

// All vertex sets inducing a K_r in g, as sorted r-sets in lexicographic
// order. Backtracking over neighborhoods with bitset intersection; r > n
// yields an empty list. Throws std::invalid_argument for r < 3.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int r);

// The r-uniform hypergraph whose edges are exactly the K_r copies of g.
// This is the observable face of the graph/hypergraph coupling: every
// hyperedge corresponds to a clique on the same vertex set.
Hypergraph clique_hypergraph(const Graph& g, int r);

// Vertices belonging to no r-clique of g, sorted. Nonempty output rules out
// any spanning K_r-cycle.
std::vector<int> uncovered_vertices(const Graph& g, int r);

// One subgraph of g isomorphic to a pattern F: its vertex set, its edge set
// (the image of F's edges), and one witness isomorphism
// (witness[k] = image of pattern vertex k).
struct FCopy {
    std::vector<int> vertices;                 // sorted
    std::vector<std::pair<int, int>> edges;    // u < v, sorted
    std::vector<int> witness;
};

// All copies of F in g, deduplicated by image edge set (copies are
// subgraphs, not maps), sorted by (vertices, edges). Throws
// std::invalid_argument if F has more than 8 vertices.
std::vector<FCopy> enumerate_f_copies(const Graph& g, const PatternGraph& f);

} // namespace krcycle
