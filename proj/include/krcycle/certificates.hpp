#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "krcycle/graph.hpp"
#include "krcycle/hypergraph.hpp"

namespace krcycle {

// Certificate for a spanning K_r-cycle: cliques H_1..H_m in cyclic order,
// each stored as a sorted r-set. Consecutive cliques share exactly one
// vertex, non-adjacent ones are disjoint, and the union is {0..n-1} with
// n = (r-1)m.
struct KrCycleCert {
    int r = 0;
    std::vector<std::vector<int>> cliques;
    int m() const { return static_cast<int>(cliques.size()); }
};

// Certificate for a loose Hamilton cycle: a cyclic vertex ordering plus the
// edge sequence E_1..E_m, each edge occupying r consecutive positions of the
// ordering and consecutive edges sharing exactly one vertex.
struct LooseHCCert {
    std::vector<int> ordering;
    std::vector<std::vector<int>> edges;
    int m() const { return static_cast<int>(edges.size()); }
};

enum class Violation {
    none,
    bad_m,
    out_of_range,
    bad_uniformity,
    non_clique,
    bad_overlap,
    bad_disjointness,
    not_spanning,
    not_an_edge,
    not_consecutive,
    bad_coverage,
    not_a_copy,
    constraint_violated,
};

const char* to_string(Violation v);

struct VerifyResult {
    bool ok = false;
    Violation violation = Violation::none;
    int index = -1;      // 0-based index of the offending clique/edge, when meaningful
    std::string detail;

    static VerifyResult pass() { return {true, Violation::none, -1, {}}; }
    static VerifyResult fail(Violation v, int index, std::string detail) {
        return {false, v, index, std::move(detail)};
    }
    explicit operator bool() const { return ok; }
};

// Checks conditions in a fixed order so tests can pin the first violation:
// m >= 3, vertex range, uniformity, clique-ness, cyclic overlap = 1,
// disjointness of non-adjacent cliques, spanning with n = (r-1)m.
VerifyResult verify_kr_cycle(const Graph& g, const KrCycleCert& cert);

// Fixed order: m = n/(r-1) with m >= 3, ordering is a permutation, edge
// uniformity, membership in h, consecutive-arc placement, cyclic overlap = 1,
// coverage (connectors in exactly 2 edges, all other vertices in exactly 1).
VerifyResult verify_loose_hc(const Hypergraph& h, const LooseHCCert& cert);

// Reinterprets a loose Hamilton cycle as a K_r-cycle certificate: the cliques
// are the hyperedges in cyclic order. Throws std::invalid_argument if m < 3.
KrCycleCert lift(const LooseHCCert& cert);

// Certificates serialize as JSON arrays of vertex arrays.
nlohmann::json to_json(const KrCycleCert& cert);
nlohmann::json to_json(const LooseHCCert& cert);
KrCycleCert kr_cycle_cert_from_json(const nlohmann::json& j);
LooseHCCert loose_hc_cert_from_json(const nlohmann::json& j);

} // namespace krcycle
