#include "krcycle/random_models.hpp"

#include <stdexcept>

namespace krcycle {

std::uint64_t pair_index(int i, int j, int n) {
    if (i < 0 || j <= i || j >= n)
        throw std::invalid_argument("pair_index: need 0 <= i < j < n");
    const std::uint64_t ui = i, uj = j, un = n;
    return ui * un - ui * (ui + 1) / 2 + (uj - ui - 1);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > static_cast<unsigned __int128>(~std::uint64_t{0}))
            throw std::overflow_error("binomial: does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t rset_rank_colex(const std::vector<int>& set) {
    std::uint64_t rank = 0;
    for (std::size_t k = 0; k < set.size(); ++k)
        rank += binomial(set[k], static_cast<int>(k) + 1);
    return rank;
}

WeightAssignment::WeightAssignment(int n, WeightKind kind, std::uint64_t seed, int r)
    : n_(n), r_(r), kind_(kind), seed_(seed) {
    if (n < 1) throw std::invalid_argument("WeightAssignment: n must be >= 1");
    if (kind == WeightKind::rset_weights && r < 3)
        throw std::invalid_argument("WeightAssignment: r-set weights need r >= 3");
}

Graph graph_at(const WeightAssignment& w, double p) {
    if (w.kind() != WeightKind::pair_weights)
        throw std::invalid_argument("graph_at: weight assignment is not pair-weights");
    Graph g(w.n());
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (w.weight_at(pair_index(i, j, w.n())) < p) g.add_edge(i, j);
    return g;
}

Hypergraph hypergraph_at(const WeightAssignment& w, double pi, int r) {
    if (w.kind() != WeightKind::rset_weights)
        throw std::invalid_argument("hypergraph_at: weight assignment is not r-set weights");
    if (r != w.r())
        throw std::invalid_argument("hypergraph_at: r does not match the weight assignment");
    const int n = w.n();
    std::vector<std::vector<int>> edges;
    std::vector<int> cur;
    // walks all sorted r-subsets; rank is maintained incrementally via colex.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            if (w.weight_at(rset_rank_colex(cur)) < pi) edges.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    if (r <= n) rec(rec, 0);
    return Hypergraph(n, r, std::move(edges));
}

ClampedProb clamp_probability(double x) {
    if (x < 0.0) return {0.0, true};
    if (x > 1.0) return {1.0, true};
    return {x, false};
}

} // namespace krcycle
