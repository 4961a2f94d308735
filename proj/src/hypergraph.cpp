#include "krcycle/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace krcycle {

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("Hypergraph: n must be >= 1");
    if (r < 3) throw std::invalid_argument("Hypergraph: r must be >= 3");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("Hypergraph: edge is not an r-set");
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0 || e[k] >= n)
                throw std::invalid_argument("Hypergraph: vertex out of range");
            if (k > 0 && e[k] == e[k - 1])
                throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Hypergraph::find_edge(const std::vector<int>& set) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), set);
    if (it == edges_.end() || *it != set) return -1;
    return static_cast<int>(it - edges_.begin());
}

Hypergraph Hypergraph::complete(int n, int r) {
    std::vector<std::vector<int>> edges;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            edges.push_back(cur);
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

Hypergraph read_hypergraph(std::istream& in) {
    int n = 0, r = 0;
    long long m = 0;
    if (!(in >> n >> r >> m)) throw std::runtime_error("hypergraph: missing header \"n r m_edges\"");
    if (n < 1 || r < 3 || m < 0) throw std::runtime_error("hypergraph: bad header");
    std::vector<std::vector<int>> edges;
    edges.reserve(m);
    for (long long k = 0; k < m; ++k) {
        std::vector<int> e(r);
        for (int i = 0; i < r; ++i)
            if (!(in >> e[i])) throw std::runtime_error("hypergraph: truncated edge list");
        for (int i = 1; i < r; ++i)
            if (e[i] <= e[i - 1]) throw std::runtime_error("hypergraph: edge vertices must be strictly increasing");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(n, r, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("hypergraph: ") + e.what());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n() << ' ' << h.r() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << e[i] << " \n"[i + 1 == e.size()];
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

} // namespace krcycle
