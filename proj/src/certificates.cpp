#include "krcycle/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace krcycle {

const char* to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::bad_m: return "bad-m";
        case Violation::out_of_range: return "out-of-range";
        case Violation::bad_uniformity: return "bad-uniformity";
        case Violation::non_clique: return "non-clique";
        case Violation::bad_overlap: return "bad-overlap";
        case Violation::bad_disjointness: return "bad-disjointness";
        case Violation::not_spanning: return "not-spanning";
        case Violation::not_an_edge: return "not-an-edge";
        case Violation::not_consecutive: return "not-consecutive";
        case Violation::bad_coverage: return "bad-coverage";
        case Violation::not_a_copy: return "not-a-copy";
        case Violation::constraint_violated: return "constraint-violated";
    }
    return "?";
}

namespace {

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else ++count, ++i, ++j;
    }
    return count;
}

// returns a copy of `set` sorted; certificates store sorted sets but the
// verifier does not trust its input.
std::vector<int> sorted(std::vector<int> set) {
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace

VerifyResult verify_kr_cycle(const Graph& g, const KrCycleCert& cert) {
    const int m = cert.m();
    const int r = cert.r;
    if (m < 3)
        return VerifyResult::fail(Violation::bad_m, -1, "m = " + std::to_string(m) + " < 3");
    if (r < 3)
        return VerifyResult::fail(Violation::bad_uniformity, -1, "r = " + std::to_string(r) + " < 3");

    std::vector<std::vector<int>> cl(cert.cliques.size());
    for (int i = 0; i < m; ++i) cl[i] = sorted(cert.cliques[i]);

    for (int i = 0; i < m; ++i)
        for (int v : cl[i])
            if (v < 0 || v >= g.n())
                return VerifyResult::fail(Violation::out_of_range, i,
                                          "vertex " + std::to_string(v) + " in clique " + std::to_string(i));

    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(cl[i].size()) != r)
            return VerifyResult::fail(Violation::bad_uniformity, i,
                                      "clique " + std::to_string(i) + " has " +
                                          std::to_string(cl[i].size()) + " vertices, want r = " + std::to_string(r));
        for (std::size_t k = 1; k < cl[i].size(); ++k)
            if (cl[i][k] == cl[i][k - 1])
                return VerifyResult::fail(Violation::bad_uniformity, i,
                                          "repeated vertex " + std::to_string(cl[i][k]) + " in clique " +
                                              std::to_string(i));
    }

    for (int i = 0; i < m; ++i)
        for (std::size_t a = 0; a < cl[i].size(); ++a)
            for (std::size_t b = a + 1; b < cl[i].size(); ++b)
                if (!g.has_edge(cl[i][a], cl[i][b]))
                    return VerifyResult::fail(Violation::non_clique, i,
                                              "missing edge {" + std::to_string(cl[i][a]) + "," +
                                                  std::to_string(cl[i][b]) + "} in clique " + std::to_string(i));

    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        int overlap = sorted_intersection_size(cl[i], cl[j]);
        if (overlap != 1)
            return VerifyResult::fail(Violation::bad_overlap, i,
                                      "cliques " + std::to_string(i) + " and " + std::to_string(j) +
                                          " share " + std::to_string(overlap) + " vertices, want 1");
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) continue;
            int overlap = sorted_intersection_size(cl[i], cl[j]);
            if (overlap != 0)
                return VerifyResult::fail(Violation::bad_disjointness, i,
                                          "non-adjacent cliques " + std::to_string(i) + " and " +
                                              std::to_string(j) + " share " + std::to_string(overlap) +
                                              " vertices");
        }

    if (g.n() != (r - 1) * m)
        return VerifyResult::fail(Violation::not_spanning, -1,
                                  "n = " + std::to_string(g.n()) + " != (r-1)m = " +
                                      std::to_string((r - 1) * m));
    std::vector<char> seen(g.n(), 0);
    for (int i = 0; i < m; ++i)
        for (int v : cl[i]) seen[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v])
            return VerifyResult::fail(Violation::not_spanning, -1,
                                      "vertex " + std::to_string(v) + " not covered");

    return VerifyResult::pass();
}

namespace {

// positions of an edge's vertices must form r consecutive positions of the
// cyclic ordering (exactly one gap between cyclically consecutive sorted
// positions, or none when the edge is the whole cycle).
bool is_cyclic_arc(std::vector<int> positions, int n) {
    std::sort(positions.begin(), positions.end());
    int gaps = 0;
    const int r = static_cast<int>(positions.size());
    for (int k = 0; k < r; ++k) {
        int cur = positions[k];
        int next = positions[(k + 1) % r];
        int diff = (next - cur + n) % n;
        if (diff != 1) ++gaps;
    }
    return gaps <= 1;
}

} // namespace

VerifyResult verify_loose_hc(const Hypergraph& h, const LooseHCCert& cert) {
    const int n = h.n();
    const int r = h.r();
    const int m = cert.m();

    if (m < 3 || m * (r - 1) != n)
        return VerifyResult::fail(Violation::bad_m, -1,
                                  "m = " + std::to_string(m) + ", want n/(r-1) = " +
                                      std::to_string(n) + "/" + std::to_string(r - 1) + " with m >= 3");

    if (static_cast<int>(cert.ordering.size()) != n)
        return VerifyResult::fail(Violation::out_of_range, -1,
                                  "ordering has " + std::to_string(cert.ordering.size()) +
                                      " entries, want n = " + std::to_string(n));
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = cert.ordering[i];
        if (v < 0 || v >= n)
            return VerifyResult::fail(Violation::out_of_range, -1,
                                      "ordering entry " + std::to_string(v) + " out of range");
        if (pos[v] != -1)
            return VerifyResult::fail(Violation::out_of_range, -1,
                                      "vertex " + std::to_string(v) + " repeated in ordering");
        pos[v] = i;
    }

    std::vector<std::vector<int>> ed(cert.edges.size());
    for (int i = 0; i < m; ++i) {
        ed[i] = sorted(cert.edges[i]);
        if (static_cast<int>(ed[i].size()) != r)
            return VerifyResult::fail(Violation::bad_uniformity, i,
                                      "edge " + std::to_string(i) + " has " + std::to_string(ed[i].size()) +
                                          " vertices, want r = " + std::to_string(r));
        for (std::size_t k = 0; k < ed[i].size(); ++k) {
            if (ed[i][k] < 0 || ed[i][k] >= n)
                return VerifyResult::fail(Violation::out_of_range, i,
                                          "vertex " + std::to_string(ed[i][k]) + " in edge " + std::to_string(i));
            if (k > 0 && ed[i][k] == ed[i][k - 1])
                return VerifyResult::fail(Violation::bad_uniformity, i,
                                          "repeated vertex in edge " + std::to_string(i));
        }
    }

    for (int i = 0; i < m; ++i)
        if (!h.has_edge(ed[i]))
            return VerifyResult::fail(Violation::not_an_edge, i,
                                      "edge " + std::to_string(i) + " is not in the hypergraph");

    for (int i = 0; i < m; ++i) {
        std::vector<int> positions;
        positions.reserve(r);
        for (int v : ed[i]) positions.push_back(pos[v]);
        if (!is_cyclic_arc(std::move(positions), n))
            return VerifyResult::fail(Violation::not_consecutive, i,
                                      "edge " + std::to_string(i) +
                                          " does not occupy r consecutive positions of the ordering");
    }

    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        int overlap = sorted_intersection_size(ed[i], ed[j]);
        if (overlap != 1)
            return VerifyResult::fail(Violation::bad_overlap, i,
                                      "edges " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                                          std::to_string(overlap) + " vertices, want 1");
    }

    std::vector<int> cover(n, 0);
    for (int i = 0; i < m; ++i)
        for (int v : ed[i]) ++cover[v];
    int connectors = 0;
    for (int v = 0; v < n; ++v) {
        if (cover[v] == 0)
            return VerifyResult::fail(Violation::bad_coverage, -1,
                                      "vertex " + std::to_string(v) + " not covered");
        if (cover[v] > 2)
            return VerifyResult::fail(Violation::bad_coverage, -1,
                                      "vertex " + std::to_string(v) + " lies in " + std::to_string(cover[v]) +
                                          " edges");
        if (cover[v] == 2) ++connectors;
    }
    if (connectors != m)
        return VerifyResult::fail(Violation::bad_coverage, -1,
                                  std::to_string(connectors) + " connecting vertices, want m = " +
                                      std::to_string(m));

    return VerifyResult::pass();
}

KrCycleCert lift(const LooseHCCert& cert) {
    if (cert.m() < 3)
        throw std::invalid_argument("lift: loose Hamilton cycle must have m >= 3 edges");
    KrCycleCert out;
    out.cliques.reserve(cert.edges.size());
    for (const auto& e : cert.edges) out.cliques.push_back(sorted(e));
    out.r = out.cliques.empty() ? 0 : static_cast<int>(out.cliques[0].size());
    return out;
}

nlohmann::json to_json(const KrCycleCert& cert) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : cert.cliques) j.push_back(c);
    return j;
}

nlohmann::json to_json(const LooseHCCert& cert) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : cert.edges) j.push_back(e);
    return j;
}

namespace {

std::vector<std::vector<int>> vertex_arrays_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::runtime_error("certificate: expected a nonempty JSON array of vertex arrays");
    std::vector<std::vector<int>> sets;
    sets.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array()) throw std::runtime_error("certificate: expected vertex arrays");
        sets.push_back(item.get<std::vector<int>>());
    }
    return sets;
}

} // namespace

KrCycleCert kr_cycle_cert_from_json(const nlohmann::json& j) {
    KrCycleCert cert;
    cert.cliques = vertex_arrays_from_json(j);
    for (auto& c : cert.cliques) std::sort(c.begin(), c.end());
    cert.r = static_cast<int>(cert.cliques[0].size());
    return cert;
}

LooseHCCert loose_hc_cert_from_json(const nlohmann::json& j) {
    LooseHCCert cert;
    cert.edges = vertex_arrays_from_json(j);
    for (auto& e : cert.edges) std::sort(e.begin(), e.end());

    // Rebuild a cyclic ordering from the edge sequence: each block runs from
    // the connector with the previous edge through the interior (sorted) to
    // the connector with the next edge.
    const int m = cert.m();
    if (m < 3) throw std::runtime_error("certificate: loose Hamilton cycle needs at least 3 edges");
    auto shared_vertex = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        if (inter.size() != 1)
            throw std::runtime_error("certificate: consecutive edges must share exactly one vertex");
        return inter[0];
    };
    std::vector<int> connector(m); // connector[i] joins edge i and edge i+1
    for (int i = 0; i < m; ++i) connector[i] = shared_vertex(cert.edges[i], cert.edges[(i + 1) % m]);
    for (int i = 0; i < m; ++i) {
        int prev = connector[(i + m - 1) % m];
        cert.ordering.push_back(prev);
        for (int v : cert.edges[i])
            if (v != prev && v != connector[i]) cert.ordering.push_back(v);
    }
    return cert;
}

} // namespace krcycle
