#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "krcycle/random_models.hpp"
#include "krcycle/solver.hpp"

using namespace krcycle;

namespace {

Hypergraph ring_hypergraph() {
    return Hypergraph(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
}

Graph triangle_ring_graph() {
    Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {0, 5}, {0, 4}})
        g.add_edge(u, v);
    return g;
}

Hypergraph random_hypergraph(int n, int r, double pi, std::uint64_t seed) {
    WeightAssignment w(n, WeightKind::rset_weights, seed, r);
    return hypergraph_at(w, pi, r);
}

} // namespace

TEST_CASE("find_loose_hc on the three canonical instances") {
    auto found = find_loose_hc(ring_hypergraph(), {});
    REQUIRE(found.status == SearchStatus::found);
    CHECK(verify_loose_hc(ring_hypergraph(), *found.certificate).ok);

    auto complete = find_loose_hc(Hypergraph::complete(6, 3), {});
    CHECK(complete.status == SearchStatus::found);

    // remove every edge containing vertex 5: uncoverable
    Hypergraph full = Hypergraph::complete(6, 3);
    std::vector<std::vector<int>> edges;
    for (const auto& e : full.edges())
        if (std::find(e.begin(), e.end(), 5) == e.end()) edges.push_back(e);
    auto none = find_loose_hc(Hypergraph(6, 3, edges), {});
    CHECK(none.status == SearchStatus::none);
}

TEST_CASE("find_loose_hc preconditions") {
    CHECK_THROWS_AS(find_loose_hc(Hypergraph(7, 3, {}), {}), std::invalid_argument);
    CHECK_THROWS_AS(find_loose_hc(Hypergraph(4, 3, {}), {}), std::invalid_argument); // m = 2
    CHECK_THROWS_AS(find_loose_hc(ring_hypergraph(), {0, 1000}), std::invalid_argument);
    CHECK_THROWS_AS(find_loose_hc(ring_hypergraph(), {1000, 0}), std::invalid_argument);
}

TEST_CASE("brute force agrees on the canonical instances") {
    CHECK(brute_force_loose_hc(ring_hypergraph()).status == SearchStatus::found);
    CHECK(brute_force_loose_hc(Hypergraph::complete(6, 3)).status == SearchStatus::found);
    CHECK(brute_force_loose_hc(Hypergraph(6, 3, {})).status == SearchStatus::none);
    CHECK_THROWS_AS(brute_force_loose_hc(Hypergraph(12, 3, {})), std::invalid_argument);
}

TEST_CASE("oracle equivalence on seeded random hypergraphs") {
    int found_count = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        double pi = 0.1 + 0.1 * (seed % 9);
        Hypergraph h = random_hypergraph(6, 3, pi, derive_seed(17, seed));
        auto fast = find_loose_hc(h, {});
        auto slow = brute_force_loose_hc(h);
        REQUIRE(fast.status == slow.status);
        if (fast.status == SearchStatus::found) {
            ++found_count;
            CHECK(verify_loose_hc(h, *fast.certificate).ok);
            CHECK(verify_loose_hc(h, *slow.certificate).ok);
        }
    }
    CHECK(found_count > 0); // the sweep must exercise both outcomes
}

TEST_CASE("oracle equivalence at r = 4 and at n = 10") {
    for (std::uint64_t seed = 0; seed < 90; ++seed) {
        double pi = 0.1 + 0.1 * (seed % 9);
        Hypergraph h = random_hypergraph(9, 4, pi, derive_seed(44, seed));
        auto fast = find_loose_hc(h, {});
        auto slow = brute_force_loose_hc(h);
        REQUIRE(fast.status == slow.status);
        if (fast.status == SearchStatus::found)
            CHECK(verify_loose_hc(h, *fast.certificate).ok);
    }
    for (std::uint64_t seed = 0; seed < 36; ++seed) {
        double pi = 0.05 + 0.05 * (seed % 9);
        Hypergraph h = random_hypergraph(10, 3, pi, derive_seed(45, seed));
        auto fast = find_loose_hc(h, {});
        auto slow = brute_force_loose_hc(h);
        REQUIRE(fast.status == slow.status);
    }
}

TEST_CASE("budget exhaustion is reported, never conflated with none") {
    Hypergraph h = random_hypergraph(12, 3, 0.35, 4321);
    auto full = find_loose_hc(h, {});
    REQUIRE(full.status != SearchStatus::budget_exhausted);
    if (full.stats.nodes > 2) {
        auto starved = find_loose_hc(h, {2, 60'000});
        CHECK(starved.status == SearchStatus::budget_exhausted);
    }
}

TEST_CASE("determinism: identical inputs give identical outcome and node count") {
    Hypergraph h = random_hypergraph(10, 3, 0.25, 999);
    auto a = find_loose_hc(h, {});
    auto b = find_loose_hc(h, {});
    CHECK(a.status == b.status);
    CHECK(a.stats.nodes == b.stats.nodes);
    if (a.certificate) {
        CHECK(a.certificate->ordering == b.certificate->ordering);
        CHECK(a.certificate->edges == b.certificate->edges);
    }
}

TEST_CASE("find_spanning_kr_cycle end to end") {
    auto complete = find_spanning_kr_cycle(Graph::complete(6), 3, {});
    REQUIRE(complete.status == SearchStatus::found);
    CHECK(verify_kr_cycle(Graph::complete(6), *complete.certificate).ok);

    // minimal witness graph: the graph also contains the triangle {0,2,4},
    // but it overlaps the others in 2 vertices, so the ring is unique
    auto ring = find_spanning_kr_cycle(triangle_ring_graph(), 3, {});
    REQUIRE(ring.status == SearchStatus::found);
    std::set<std::vector<int>> got(ring.certificate->cliques.begin(), ring.certificate->cliques.end());
    std::set<std::vector<int>> expect{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
    CHECK(got == expect);
    CHECK(verify_kr_cycle(triangle_ring_graph(), *ring.certificate).ok);

    // complete graph minus all edges at vertex 0: short-circuit none
    Graph g(6);
    for (auto [u, v] : Graph::complete(6).edges())
        if (u != 0) g.add_edge(u, v);
    auto none = find_spanning_kr_cycle(g, 3, {});
    CHECK(none.status == SearchStatus::none);
    CHECK(none.short_circuited);
    CHECK(none.uncovered_count == 1);
    CHECK(none.stats.nodes == 0);

    CHECK_THROWS_AS(find_spanning_kr_cycle(Graph::complete(7), 3, {}), std::invalid_argument);
}

TEST_CASE("kr-cycle found certificates verify across random graphs") {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        WeightAssignment w(12, WeightKind::pair_weights, derive_seed(888, seed));
        Graph g = graph_at(w, 0.5);
        auto outcome = find_spanning_kr_cycle(g, 3, {});
        if (outcome.status == SearchStatus::found) {
            ++found;
            CHECK(verify_kr_cycle(g, *outcome.certificate).ok);
        } else if (outcome.short_circuited) {
            CHECK(outcome.uncovered_count > 0);
            CHECK(outcome.stats.nodes == 0);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("monotonicity under coupling on a p grid") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        WeightAssignment w(12, WeightKind::pair_weights, derive_seed(5150, seed));
        bool found_before = false;
        for (double p : {0.15, 0.25, 0.35, 0.5, 0.7, 0.9}) {
            auto outcome = find_spanning_kr_cycle(graph_at(w, p), 3, {});
            REQUIRE(outcome.status != SearchStatus::budget_exhausted);
            bool found = outcome.status == SearchStatus::found;
            if (found_before) CHECK(found);
            found_before = found;
        }
    }
}

TEST_CASE("find_f_cycle with K_3 matches the kr pipeline") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        WeightAssignment w(6, WeightKind::pair_weights, derive_seed(2, seed));
        Graph g = graph_at(w, 0.5 + 0.02 * (seed % 5));
        auto via_f = find_f_cycle(g, PatternGraph::complete(3), {});
        auto via_kr = find_spanning_kr_cycle(g, 3, {});
        CHECK(via_f.status == via_kr.status);
        if (via_f.status == SearchStatus::found)
            CHECK(verify_f_cycle(g, PatternGraph::complete(3), *via_f.certificate).ok);
    }
}

TEST_CASE("find_f_cycle on a hand-built ring of three C_4s") {
    // three 4-cycles joined at single vertices: 0-1-2-3-0, 3-4-5-6-3, 6-7-8-0-6
    Graph g(9);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6},
                        {6, 7}, {7, 8}, {0, 8}, {0, 6}})
        g.add_edge(u, v);
    auto outcome = find_f_cycle(g, PatternGraph::cycle(4), {});
    REQUIRE(outcome.status == SearchStatus::found);
    CHECK(outcome.certificate->m() == 3);
    CHECK(verify_f_cycle(g, PatternGraph::cycle(4), *outcome.certificate).ok);
}

TEST_CASE("connector orbit constraints: P_3 ends allowed, middles impossible") {
    // ring of three paths 0-1-2, 2-3-4, 4-5-0; connectors 2, 4, 0 are path ends
    Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})
        g.add_edge(u, v);
    PatternGraph p3 = PatternGraph::path(3);
    auto orbits = p3.automorphism_orbits();
    int end_orbit = orbits[0];
    int mid_orbit = orbits[1];
    REQUIRE(end_orbit != mid_orbit);

    auto unconstrained = find_f_cycle(g, p3, {});
    CHECK(unconstrained.status == SearchStatus::found);

    auto ends_only = find_f_cycle(g, p3, {}, std::set<int>{end_orbit});
    CHECK(ends_only.status == SearchStatus::found);
    CHECK(verify_f_cycle(g, p3, *ends_only.certificate, std::set<int>{end_orbit}).ok);

    // a copy has one middle vertex but needs two distinct connectors
    auto mid_only = find_f_cycle(g, p3, {}, std::set<int>{mid_orbit});
    CHECK(mid_only.status == SearchStatus::none);
}

TEST_CASE("find_f_cycle preconditions") {
    Graph g = Graph::complete(8);
    CHECK_THROWS_AS(find_f_cycle(g, PatternGraph::cycle(4), {}), std::invalid_argument); // 3 !| 8
    CHECK_THROWS_AS(find_f_cycle(Graph::complete(4), PatternGraph::complete(3), {}),
                    std::invalid_argument); // n < 3(v-1)
    CHECK_THROWS_AS(find_f_cycle(Graph::complete(9), PatternGraph::cycle(4), {}, std::set<int>{7}),
                    std::invalid_argument); // unknown orbit id
}

TEST_CASE("verify_f_cycle rejects structural damage") {
    Graph g(9);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6},
                        {6, 7}, {7, 8}, {0, 8}, {0, 6}})
        g.add_edge(u, v);
    PatternGraph c4 = PatternGraph::cycle(4);
    auto outcome = find_f_cycle(g, c4, {});
    REQUIRE(outcome.status == SearchStatus::found);
    FCycleCert cert = *outcome.certificate;

    FCycleCert short_cert = cert;
    short_cert.copies.pop_back();
    CHECK_FALSE(verify_f_cycle(g, c4, short_cert).ok);

    FCycleCert wrecked = cert;
    wrecked.copies[0].edges.pop_back();
    auto res = verify_f_cycle(g, c4, wrecked);
    CHECK_FALSE(res.ok);
    CHECK(res.violation == Violation::not_a_copy);
}
