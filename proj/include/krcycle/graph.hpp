#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "krcycle/bitset.hpp"

namespace krcycle {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// No self-loops, no multi-edges; adjacency stays symmetric by construction.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v); // throws std::invalid_argument on bad pair
    bool has_edge(int u, int v) const;
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    static Graph complete(int n);

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    int edge_count_ = 0;
    std::vector<Bitset> adj_;
};

// Text format: first line "n m_edges", then one "u v" per line, 0-based, u < v.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

} // namespace krcycle
