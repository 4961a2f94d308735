#include "krcycle/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>

namespace krcycle {

PatternGraph::PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : v_(vertex_count), edges_(std::move(edges)) {
    if (v_ < 2) throw std::invalid_argument("PatternGraph: need at least 2 vertices");
    for (auto& [u, w] : edges_) {
        if (u > w) std::swap(u, w);
        if (u < 0 || w >= v_ || u == w)
            throw std::invalid_argument("PatternGraph: bad edge");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("PatternGraph: duplicate edge");

    // connectivity
    std::vector<int> comp(v_);
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto [u, w] : edges_) comp[root(u)] = root(w);
    for (int v = 1; v < v_; ++v)
        if (root(v) != root(0)) throw std::invalid_argument("PatternGraph: must be connected");
}

bool PatternGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int PatternGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

bool PatternGraph::is_complete() const {
    return edge_count() == v_ * (v_ - 1) / 2;
}

PatternGraph PatternGraph::complete(int r) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) edges.emplace_back(u, v);
    return PatternGraph(r, std::move(edges));
}

PatternGraph PatternGraph::cycle(int k) {
    if (k < 3) throw std::invalid_argument("PatternGraph::cycle: need k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
    return PatternGraph(k, std::move(edges));
}

PatternGraph PatternGraph::path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    return PatternGraph(k, std::move(edges));
}

PatternGraph PatternGraph::complete_minus_edge(int r) {
    if (r < 3) throw std::invalid_argument("PatternGraph::complete_minus_edge: need r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v)
            if (!(u == r - 2 && v == r - 1)) edges.emplace_back(u, v);
    return PatternGraph(r, std::move(edges));
}

std::vector<std::vector<int>> PatternGraph::automorphisms() const {
    if (v_ > 8) throw std::invalid_argument("PatternGraph::automorphisms: v > 8");
    std::vector<std::vector<int>> autos;
    std::vector<int> perm(v_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, w] : edges_) {
            if (!has_edge(perm[u], perm[w])) {
                ok = false;
                break;
            }
        }
        // edge counts match, so edge-preserving injections are automorphisms
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

std::vector<int> PatternGraph::automorphism_orbits() const {
    std::vector<int> comp(v_);
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& a : automorphisms())
        for (int v = 0; v < v_; ++v) comp[root(v)] = root(a[v]);
    std::vector<int> orbit(v_, -1);
    int next = 0;
    for (int v = 0; v < v_; ++v) {
        int rv = root(v);
        if (orbit[rv] == -1) orbit[rv] = next++;
        orbit[v] = orbit[rv];
    }
    return orbit;
}

PatternGraph read_pattern(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("pattern: missing header \"n m_edges\"");
    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("pattern: truncated edge list");
        edges.emplace_back(u, v);
    }
    try {
        return PatternGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("pattern: ") + e.what());
    }
}

PatternGraph read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return read_pattern(in);
}

} // namespace krcycle
