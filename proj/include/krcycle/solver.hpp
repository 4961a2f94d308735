#pragma once

#include <optional>
#include <set>
#include <vector>

#include "krcycle/certificates.hpp"
#include "krcycle/cliques.hpp"
#include "krcycle/graph.hpp"
#include "krcycle/hypergraph.hpp"
#include "krcycle/pattern.hpp"

namespace krcycle {

struct SearchBudget {
    long long node_limit = 20'000'000; // search-tree nodes
    long long time_limit_ms = 60'000;  // wall clock
};

// "none" is only ever reported on exhaustive completion; running out of
// budget is a third state, never conflated with refutation.
enum class SearchStatus { found, none, budget_exhausted };

const char* to_string(SearchStatus s);

struct SearchStats {
    long long nodes = 0;
    long long elapsed_ms = 0;
};

template <class Cert>
struct SearchOutcome {
    SearchStatus status = SearchStatus::none;
    std::optional<Cert> certificate; // present iff found
    SearchStats stats;
};

// Exact search for a loose Hamilton cycle in an r-uniform hypergraph.
//
// Strategy (fixed so outcomes and stats are deterministic): grow a loose
// path edge by edge. The first edge is anchored on vertex 0; candidate
// continuations are ordered by their lowest-indexed new vertex, ties broken
// lexicographically; connecting-vertex choices iterate in ascending order.
// Orientation is halved by requiring the first edge's forward connector to
// be smaller than its closing connector. Pruning never changes outcomes,
// only node counts.
//
// Preconditions: (r-1) | n and n >= 3(r-1); throws std::invalid_argument.
SearchOutcome<LooseHCCert> find_loose_hc(const Hypergraph& h, const SearchBudget& budget);

// Independent oracle: factorial enumeration of cyclic orderings with vertex
// 0's position and the orientation fixed, each tried at every block phase.
// Never reports budget_exhausted. Requires n <= 10.
SearchOutcome<LooseHCCert> brute_force_loose_hc(const Hypergraph& h);

struct KrCycleSearchOutcome {
    SearchStatus status = SearchStatus::none;
    std::optional<KrCycleCert> certificate;
    SearchStats stats;
    int uncovered_count = 0;   // vertices in no r-clique of g
    bool short_circuited = false; // none decided by uncovered vertices, no search run
};

// Pipeline: clique hypergraph -> loose Hamilton cycle -> lift. If some
// vertex lies in no r-clique the answer is none without any search.
KrCycleSearchOutcome find_spanning_kr_cycle(const Graph& g, int r, const SearchBudget& budget);

// Certificate for a spanning F-cycle: edge-disjoint copies of F in cyclic
// order, adjacent copies sharing exactly one vertex.
struct FCycleCert {
    std::vector<FCopy> copies;
    int m() const { return static_cast<int>(copies.size()); }
};

// Optional connector constraint: orbit ids of F (as numbered by
// PatternGraph::automorphism_orbits) in which every shared vertex must lie,
// on the side of both incident copies.
using ConnectorConstraint = std::optional<std::set<int>>;

VerifyResult verify_f_cycle(const Graph& g, const PatternGraph& f, const FCycleCert& cert,
                            const ConnectorConstraint& constraint = std::nullopt);

// Generalized cycle search over F-copies; same strategy and determinism
// contract as find_loose_hc. Preconditions: F connected with |V(F)| >= 3,
// (|V(F)|-1) | n, n >= 3(|V(F)|-1).
SearchOutcome<FCycleCert> find_f_cycle(const Graph& g, const PatternGraph& f,
                                       const SearchBudget& budget,
                                       const ConnectorConstraint& constraint = std::nullopt);

} // namespace krcycle
