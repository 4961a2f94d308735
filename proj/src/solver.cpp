#include "krcycle/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace krcycle {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

void check_budget(const SearchBudget& budget) {
    if (budget.node_limit <= 0 || budget.time_limit_ms <= 0)
        throw std::invalid_argument("SearchBudget: limits must be positive");
}

// A block is a candidate piece of the cycle: a hyperedge or an F-copy,
// reduced to its sorted vertex set. `orbit` (parallel to `vertices`) carries
// automorphism-orbit labels for connector constraints; empty when unused.
struct Block {
    std::vector<int> vertices;
    Bitset mask;
    std::vector<int> orbit;
};

// Backtracking search for a cyclic cover by blocks where consecutive blocks
// share exactly one vertex and non-consecutive ones are disjoint.
//
// The first block is anchored on vertex 0 (every cycle covers it, and any
// rotation puts one of its 0-blocks first). Orientation is halved by
// requiring the first block's forward connector to be smaller than its
// closing connector. Extensions are ordered by lowest-indexed new vertex,
// then block id (ids are lexicographic), and connector choices ascend, so
// the outcome, certificate and node count are all deterministic.
struct CycleSearch {
    int n;
    int block_size;
    const std::vector<Block>& blocks;
    const std::set<int>* allowed_orbits; // connector constraint, nullptr = off

    std::vector<std::vector<int>> inc;   // per vertex: ascending ids of blocks containing it
    std::map<std::vector<int>, std::vector<int>> by_vertex_set;

    long long node_limit;
    Clock::time_point deadline;
    long long nodes = 0;
    bool exhausted = false;

    Bitset uncovered;
    int uncovered_count;
    std::vector<std::pair<int, int>> chain; // (block id, forward connector)
    int back_connector = -1;
    int closing_block = -1;

    CycleSearch(int n_, int block_size_, const std::vector<Block>& blocks_,
                const std::set<int>* constraint, const SearchBudget& budget)
        : n(n_), block_size(block_size_), blocks(blocks_), allowed_orbits(constraint),
          inc(n_), node_limit(budget.node_limit),
          deadline(Clock::now() + std::chrono::milliseconds(budget.time_limit_ms)),
          uncovered(n_), uncovered_count(n_) {
        for (int id = 0; id < static_cast<int>(blocks.size()); ++id) {
            for (int v : blocks[id].vertices) inc[v].push_back(id);
            by_vertex_set[blocks[id].vertices].push_back(id);
        }
        for (int v = 0; v < n; ++v) uncovered.set(v);
    }

    bool orbit_ok(int block_id, int v) const {
        if (!allowed_orbits) return true;
        const Block& b = blocks[block_id];
        auto it = std::lower_bound(b.vertices.begin(), b.vertices.end(), v);
        int label = b.orbit[it - b.vertices.begin()];
        return allowed_orbits->count(label) > 0;
    }

    void cover(int block_id, int except) {
        for (int v : blocks[block_id].vertices)
            if (v != except) { uncovered.reset(v); --uncovered_count; }
    }
    void uncover(int block_id, int except) {
        for (int v : blocks[block_id].vertices)
            if (v != except) { uncovered.set(v); ++uncovered_count; }
    }

    bool tick() {
        if (++nodes > node_limit) { exhausted = true; return false; }
        if ((nodes & 1023) == 0 && Clock::now() > deadline) { exhausted = true; return false; }
        return true;
    }

    bool try_close(int c) {
        std::vector<int> key = uncovered.to_vector();
        key.push_back(c);
        key.push_back(back_connector);
        std::sort(key.begin(), key.end());
        auto it = by_vertex_set.find(key);
        if (it == by_vertex_set.end()) return false;
        for (int e : it->second) {
            if (!orbit_ok(e, c) || !orbit_ok(e, back_connector)) continue;
            closing_block = e;
            return true;
        }
        return false;
    }

    bool extend(int c) {
        if (!tick()) return false;
        if (uncovered_count == block_size - 2) return try_close(c);

        // every uncovered vertex still needs a block confined to the
        // remaining free vertices (plus the two open connectors)
        Bitset reachable = uncovered;
        reachable.set(c);
        reachable.set(back_connector);
        for (int v = uncovered.find_first(); v >= 0; v = uncovered.find_next(v + 1)) {
            bool supported = false;
            for (int e : inc[v])
                if (blocks[e].mask.is_subset_of(reachable)) { supported = true; break; }
            if (!supported) return false;
        }

        Bitset ext_allowed = uncovered;
        ext_allowed.set(c);
        std::vector<std::pair<int, int>> cands; // (lowest new vertex, id)
        for (int e : inc[c]) {
            if (!blocks[e].mask.is_subset_of(ext_allowed)) continue;
            if (!orbit_ok(e, c)) continue;
            const auto& vs = blocks[e].vertices;
            cands.emplace_back(vs[0] == c ? vs[1] : vs[0], e);
        }
        std::sort(cands.begin(), cands.end());

        for (auto [min_new, e] : cands) {
            (void)min_new;
            cover(e, c);
            for (int cnext : blocks[e].vertices) {
                if (cnext == c) continue;
                if (!orbit_ok(e, cnext)) continue;
                chain.emplace_back(e, cnext);
                if (extend(cnext)) return true;
                chain.pop_back();
                if (exhausted) break;
            }
            uncover(e, c);
            if (exhausted) return false;
        }
        return false;
    }

    // found => chain + closing_block describe the cycle
    SearchStatus run() {
        nodes = 1;
        for (int v = 0; v < n; ++v)
            if (inc[v].empty()) return SearchStatus::none;

        for (int e : inc[0]) {
            cover(e, -1);
            const auto& vs = blocks[e].vertices;
            for (std::size_t ci = 0; ci < vs.size(); ++ci) {
                if (!orbit_ok(e, vs[ci])) continue;
                for (std::size_t bi = ci + 1; bi < vs.size(); ++bi) {
                    if (!orbit_ok(e, vs[bi])) continue;
                    back_connector = vs[bi];
                    chain.assign(1, {e, vs[ci]});
                    if (extend(vs[ci])) return SearchStatus::found;
                    if (exhausted) {
                        uncover(e, -1);
                        return SearchStatus::budget_exhausted;
                    }
                }
            }
            uncover(e, -1);
        }
        return SearchStatus::none;
    }
};

long long elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<Block> blocks_from_hypergraph(const Hypergraph& h) {
    std::vector<Block> blocks(h.edge_count());
    for (int id = 0; id < h.edge_count(); ++id) {
        blocks[id].vertices = h.edge(id);
        blocks[id].mask = Bitset(h.n());
        for (int v : blocks[id].vertices) blocks[id].mask.set(v);
    }
    return blocks;
}

// cyclic block sequence -> ordering; each block runs from its backward
// connector through its interior (sorted) up to, not including, its forward
// connector.
std::vector<int> ordering_from_chain(const std::vector<Block>& blocks,
                                     const std::vector<std::pair<int, int>>& chain,
                                     int closing_block, int back_connector) {
    std::vector<int> ids;
    std::vector<int> forward;
    for (auto [e, c] : chain) { ids.push_back(e); forward.push_back(c); }
    ids.push_back(closing_block);
    forward.push_back(back_connector);

    std::vector<int> ordering;
    int prev = back_connector;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ordering.push_back(prev);
        for (int v : blocks[ids[i]].vertices)
            if (v != prev && v != forward[i]) ordering.push_back(v);
        prev = forward[i];
    }
    return ordering;
}

} // namespace

SearchOutcome<LooseHCCert> find_loose_hc(const Hypergraph& h, const SearchBudget& budget) {
    check_budget(budget);
    const int n = h.n(), r = h.r();
    if (n % (r - 1) != 0)
        throw std::invalid_argument("find_loose_hc: (r-1) must divide n");
    if (n < 3 * (r - 1))
        throw std::invalid_argument("find_loose_hc: need n >= 3(r-1)");

    auto start = Clock::now();
    std::vector<Block> blocks = blocks_from_hypergraph(h);
    CycleSearch search(n, r, blocks, nullptr, budget);
    SearchStatus status = search.run();

    SearchOutcome<LooseHCCert> out;
    out.status = status;
    out.stats.nodes = search.nodes;
    if (status == SearchStatus::found) {
        LooseHCCert cert;
        cert.ordering = ordering_from_chain(blocks, search.chain, search.closing_block,
                                            search.back_connector);
        for (auto [e, c] : search.chain) { (void)c; cert.edges.push_back(blocks[e].vertices); }
        cert.edges.push_back(blocks[search.closing_block].vertices);
        if (!verify_loose_hc(h, cert))
            throw std::logic_error("find_loose_hc: constructed certificate failed verification");
        out.certificate = std::move(cert);
    }
    out.stats.elapsed_ms = elapsed_ms_since(start);
    return out;
}

SearchOutcome<LooseHCCert> brute_force_loose_hc(const Hypergraph& h) {
    const int n = h.n(), r = h.r();
    if (n > 10) throw std::invalid_argument("brute_force_loose_hc: n must be <= 10");
    if (n % (r - 1) != 0)
        throw std::invalid_argument("brute_force_loose_hc: (r-1) must divide n");
    if (n < 3 * (r - 1))
        throw std::invalid_argument("brute_force_loose_hc: need n >= 3(r-1)");
    const int m = n / (r - 1);

    auto start = Clock::now();
    SearchOutcome<LooseHCCert> out;
    out.status = SearchStatus::none;

    // all cyclic orderings with vertex 0 first; reflections skipped via
    // w[1] < w[n-1]; every block phase tried for each ordering
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<int> sorted_window(r);
    do {
        if (w[1] > w[n - 1]) continue;
        ++out.stats.nodes;
        for (int phase = 0; phase < r - 1 && !out.certificate; ++phase) {
            bool all_edges = true;
            std::vector<std::vector<int>> edges;
            for (int j = 0; j < m && all_edges; ++j) {
                for (int s = 0; s < r; ++s)
                    sorted_window[s] = w[(phase + j * (r - 1) + s) % n];
                std::sort(sorted_window.begin(), sorted_window.end());
                if (!h.has_edge(sorted_window)) all_edges = false;
                else edges.push_back(sorted_window);
            }
            if (all_edges) {
                LooseHCCert cert;
                cert.ordering = w;
                cert.edges = std::move(edges);
                if (!verify_loose_hc(h, cert))
                    throw std::logic_error("brute_force_loose_hc: certificate failed verification");
                out.certificate = std::move(cert);
                out.status = SearchStatus::found;
            }
        }
        if (out.certificate) break;
    } while (std::next_permutation(w.begin() + 1, w.end()));

    out.stats.elapsed_ms = elapsed_ms_since(start);
    return out;
}

KrCycleSearchOutcome find_spanning_kr_cycle(const Graph& g, int r, const SearchBudget& budget) {
    check_budget(budget);
    if (r < 3) throw std::invalid_argument("find_spanning_kr_cycle: r must be >= 3");
    const int n = g.n();
    if (n % (r - 1) != 0)
        throw std::invalid_argument("find_spanning_kr_cycle: (r-1) must divide n");

    auto start = Clock::now();
    KrCycleSearchOutcome out;

    std::vector<std::vector<int>> cliques = enumerate_cliques(g, r);
    std::vector<char> covered(n, 0);
    for (const auto& c : cliques)
        for (int v : c) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) ++out.uncovered_count;

    if (out.uncovered_count > 0 || n < 3 * (r - 1)) {
        // some vertex is in no K_r, or fewer than 3 cliques fit: no spanning
        // K_r-cycle can exist, so refute without searching
        out.status = SearchStatus::none;
        out.short_circuited = true;
        out.stats.elapsed_ms = elapsed_ms_since(start);
        return out;
    }

    Hypergraph h(n, r, std::move(cliques));
    SearchOutcome<LooseHCCert> hc = find_loose_hc(h, budget);
    out.status = hc.status;
    out.stats = hc.stats;
    if (hc.status == SearchStatus::found) {
        KrCycleCert cert = lift(*hc.certificate);
        if (!verify_kr_cycle(g, cert))
            throw std::logic_error("find_spanning_kr_cycle: lifted certificate failed verification");
        out.certificate = std::move(cert);
    }
    out.stats.elapsed_ms = elapsed_ms_since(start);
    return out;
}

namespace {

// first isomorphism from f onto the copy's edge set, or empty if none;
// iso[k] = image vertex of pattern vertex k
std::vector<int> copy_isomorphism(const PatternGraph& f, const FCopy& copy) {
    const int fv = f.vertex_count();
    if (static_cast<int>(copy.vertices.size()) != fv) return {};
    if (copy.edges.size() != f.edges().size()) return {};
    auto copy_has_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return std::binary_search(copy.edges.begin(), copy.edges.end(), std::make_pair(a, b));
    };
    std::vector<int> idx(fv);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : f.edges())
            if (!copy_has_edge(copy.vertices[idx[u]], copy.vertices[idx[v]])) { ok = false; break; }
        if (ok) {
            std::vector<int> iso(fv);
            for (int k = 0; k < fv; ++k) iso[k] = copy.vertices[idx[k]];
            return iso;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return {};
}

int orbit_of_image(const PatternGraph& f, const std::vector<int>& orbits,
                   const std::vector<int>& iso, int image_vertex) {
    for (int k = 0; k < f.vertex_count(); ++k)
        if (iso[k] == image_vertex) return orbits[k];
    return -1;
}

} // namespace

VerifyResult verify_f_cycle(const Graph& g, const PatternGraph& f, const FCycleCert& cert,
                            const ConnectorConstraint& constraint) {
    const int m = cert.m();
    const int fv = f.vertex_count();
    if (m < 3)
        return VerifyResult::fail(Violation::bad_m, -1, "m = " + std::to_string(m) + " < 3");

    for (int i = 0; i < m; ++i)
        for (int v : cert.copies[i].vertices)
            if (v < 0 || v >= g.n())
                return VerifyResult::fail(Violation::out_of_range, i,
                                          "vertex " + std::to_string(v) + " in copy " + std::to_string(i));

    std::vector<std::vector<int>> isos(m);
    for (int i = 0; i < m; ++i) {
        const FCopy& copy = cert.copies[i];
        std::vector<int> vs = copy.vertices;
        std::sort(vs.begin(), vs.end());
        if (static_cast<int>(vs.size()) != fv ||
            std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            return VerifyResult::fail(Violation::not_a_copy, i,
                                      "copy " + std::to_string(i) + " does not have |V(F)| distinct vertices");
        for (auto [u, v] : copy.edges) {
            if (!std::binary_search(vs.begin(), vs.end(), u) ||
                !std::binary_search(vs.begin(), vs.end(), v))
                return VerifyResult::fail(Violation::not_a_copy, i,
                                          "copy " + std::to_string(i) + " has an edge outside its vertex set");
            if (!g.has_edge(u, v))
                return VerifyResult::fail(Violation::not_a_copy, i,
                                          "copy " + std::to_string(i) + " uses edge {" + std::to_string(u) +
                                              "," + std::to_string(v) + "} missing from the graph");
        }
        isos[i] = copy_isomorphism(f, copy);
        if (isos[i].empty())
            return VerifyResult::fail(Violation::not_a_copy, i,
                                      "copy " + std::to_string(i) + " is not isomorphic to F");
    }

    auto inter_size = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    std::vector<int> shared(m, -1); // shared[i] joins copy i and copy i+1
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        auto inter = inter_size(cert.copies[i].vertices, cert.copies[j].vertices);
        if (inter.size() != 1)
            return VerifyResult::fail(Violation::bad_overlap, i,
                                      "copies " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                                          std::to_string(inter.size()) + " vertices, want 1");
        shared[i] = inter[0];
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) continue;
            auto inter = inter_size(cert.copies[i].vertices, cert.copies[j].vertices);
            if (!inter.empty())
                return VerifyResult::fail(Violation::bad_disjointness, i,
                                          "non-adjacent copies " + std::to_string(i) + " and " +
                                              std::to_string(j) + " intersect");
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<std::pair<int, int>> common;
            std::set_intersection(cert.copies[i].edges.begin(), cert.copies[i].edges.end(),
                                  cert.copies[j].edges.begin(), cert.copies[j].edges.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                return VerifyResult::fail(Violation::bad_disjointness, i,
                                          "copies " + std::to_string(i) + " and " + std::to_string(j) +
                                              " share an edge");
        }

    if (g.n() != m * (fv - 1))
        return VerifyResult::fail(Violation::not_spanning, -1,
                                  "n = " + std::to_string(g.n()) + " != m(|V(F)|-1) = " +
                                      std::to_string(m * (fv - 1)));
    std::vector<char> seen(g.n(), 0);
    for (const auto& copy : cert.copies)
        for (int v : copy.vertices) seen[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v])
            return VerifyResult::fail(Violation::not_spanning, -1,
                                      "vertex " + std::to_string(v) + " not covered");

    if (constraint) {
        std::vector<int> orbits = f.automorphism_orbits();
        for (int i = 0; i < m; ++i) {
            int j = (i + 1) % m;
            int v = shared[i];
            int oi = orbit_of_image(f, orbits, isos[i], v);
            int oj = orbit_of_image(f, orbits, isos[j], v);
            if (!constraint->count(oi) || !constraint->count(oj))
                return VerifyResult::fail(Violation::constraint_violated, i,
                                          "connector " + std::to_string(v) +
                                              " lies in a disallowed orbit of an incident copy");
        }
    }
    return VerifyResult::pass();
}

SearchOutcome<FCycleCert> find_f_cycle(const Graph& g, const PatternGraph& f,
                                       const SearchBudget& budget,
                                       const ConnectorConstraint& constraint) {
    check_budget(budget);
    const int fv = f.vertex_count();
    if (fv < 3) throw std::invalid_argument("find_f_cycle: pattern needs at least 3 vertices");
    const int n = g.n();
    if (n % (fv - 1) != 0)
        throw std::invalid_argument("find_f_cycle: (|V(F)|-1) must divide n");
    if (n < 3 * (fv - 1))
        throw std::invalid_argument("find_f_cycle: need n >= 3(|V(F)|-1)");

    std::vector<int> orbits = f.automorphism_orbits();
    if (constraint) {
        int max_orbit = *std::max_element(orbits.begin(), orbits.end());
        for (int id : *constraint)
            if (id < 0 || id > max_orbit)
                throw std::invalid_argument("find_f_cycle: unknown orbit id in connector constraint");
    }

    auto start = Clock::now();
    std::vector<FCopy> copies = enumerate_f_copies(g, f);
    std::vector<Block> blocks(copies.size());
    for (std::size_t id = 0; id < copies.size(); ++id) {
        blocks[id].vertices = copies[id].vertices;
        blocks[id].mask = Bitset(n);
        for (int v : blocks[id].vertices) blocks[id].mask.set(v);
        blocks[id].orbit.assign(fv, -1);
        for (int k = 0; k < fv; ++k) {
            auto it = std::lower_bound(blocks[id].vertices.begin(), blocks[id].vertices.end(),
                                       copies[id].witness[k]);
            blocks[id].orbit[it - blocks[id].vertices.begin()] = orbits[k];
        }
    }

    CycleSearch search(n, fv, blocks, constraint ? &*constraint : nullptr, budget);
    SearchStatus status = search.run();

    SearchOutcome<FCycleCert> out;
    out.status = status;
    out.stats.nodes = search.nodes;
    if (status == SearchStatus::found) {
        FCycleCert cert;
        for (auto [e, c] : search.chain) { (void)c; cert.copies.push_back(copies[e]); }
        cert.copies.push_back(copies[search.closing_block]);
        if (!verify_f_cycle(g, f, cert, constraint))
            throw std::logic_error("find_f_cycle: constructed certificate failed verification");
        out.certificate = std::move(cert);
    }
    out.stats.elapsed_ms = elapsed_ms_since(start);
    return out;
}

} // namespace krcycle
