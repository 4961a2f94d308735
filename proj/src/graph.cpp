#include "krcycle/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace krcycle {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
    adj_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Graph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    if (adj_[u].test(v)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return u != v && adj_[u].test(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].find_next(u + 1); v >= 0; v = adj_[u].find_next(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph read_graph(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("graph: missing header \"n m_edges\"");
    if (n < 1 || m < 0) throw std::runtime_error("graph: bad header");
    Graph g(n);
    for (long long k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("graph: truncated edge list");
        if (u >= v) throw std::runtime_error("graph: edges must satisfy u < v");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("graph: ") + e.what());
        }
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

} // namespace krcycle
