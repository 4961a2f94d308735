#include "krcycle/cliques.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace krcycle {

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("enumerate_cliques: r must be >= 3");
    std::vector<std::vector<int>> out;
    if (r > g.n()) return out;

    std::vector<int> cur;
    // extend the current clique with vertices above the last one whose
    // neighborhoods contain everything chosen so far
    auto rec = [&](auto&& self, const Bitset& cand) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        // not enough candidates left to reach size r
        if (cand.count() < r - static_cast<int>(cur.size())) return;
        for (int v = cand.find_first(); v >= 0; v = cand.find_next(v + 1)) {
            cur.push_back(v);
            Bitset next = cand & g.neighbors(v);
            // only vertices above v: keeps the output lexicographic, each set unique
            next.reset_below(v + 1);
            self(self, next);
            cur.pop_back();
        }
    };
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    rec(rec, all);
    return out;
}

Hypergraph clique_hypergraph(const Graph& g, int r) {
    return Hypergraph(g.n(), r, enumerate_cliques(g, r));
}

std::vector<int> uncovered_vertices(const Graph& g, int r) {
    std::vector<char> covered(g.n(), 0);
    for (const auto& clique : enumerate_cliques(g, r))
        for (int v : clique) covered[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) out.push_back(v);
    return out;
}

std::vector<FCopy> enumerate_f_copies(const Graph& g, const PatternGraph& f) {
    if (f.vertex_count() > 8)
        throw std::invalid_argument("enumerate_f_copies: pattern too large (v > 8)");

    const int fv = f.vertex_count();
    // map pattern vertices in an order where each one after the first is
    // adjacent to an earlier one (exists since F is connected)
    std::vector<int> order;
    {
        std::vector<char> placed(fv, 0);
        order.push_back(0);
        placed[0] = 1;
        while (static_cast<int>(order.size()) < fv) {
            for (int v = 0; v < fv; ++v) {
                if (placed[v]) continue;
                bool attached = false;
                for (int u : order)
                    if (f.has_edge(u, v)) { attached = true; break; }
                if (attached) {
                    order.push_back(v);
                    placed[v] = 1;
                    break;
                }
            }
        }
    }

    std::map<std::vector<std::pair<int, int>>, std::vector<int>> by_edge_set;
    std::vector<int> image(fv, -1);
    std::vector<char> used(g.n(), 0);

    auto record = [&]() {
        std::vector<std::pair<int, int>> edge_image;
        edge_image.reserve(f.edges().size());
        for (auto [u, v] : f.edges()) {
            int a = image[u], b = image[v];
            if (a > b) std::swap(a, b);
            edge_image.emplace_back(a, b);
        }
        std::sort(edge_image.begin(), edge_image.end());
        by_edge_set.try_emplace(std::move(edge_image), image);
    };

    auto rec = [&](auto&& self, int k) -> void {
        if (k == fv) {
            record();
            return;
        }
        int pv = order[k];
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int pu = order[j];
                if (f.has_edge(pu, pv) && !g.has_edge(image[pu], cand)) ok = false;
            }
            if (!ok) continue;
            image[pv] = cand;
            used[cand] = 1;
            self(self, k + 1);
            used[cand] = 0;
            image[pv] = -1;
        }
    };
    rec(rec, 0);

    std::vector<FCopy> out;
    out.reserve(by_edge_set.size());
    for (auto& [edge_set, witness] : by_edge_set) {
        FCopy copy;
        copy.edges = edge_set;
        copy.witness = witness;
        copy.vertices = witness;
        std::sort(copy.vertices.begin(), copy.vertices.end());
        out.push_back(std::move(copy));
    }
    std::sort(out.begin(), out.end(), [](const FCopy& a, const FCopy& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
    });
    return out;
}

} // namespace krcycle
