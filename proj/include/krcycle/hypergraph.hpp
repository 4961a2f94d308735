#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krcycle {

// r-uniform hypergraph on vertices 0..n-1. Edges are sorted r-sets of
// distinct vertices; the edge list is kept lexicographically sorted and
// deduplicated, so edge ids are canonical.
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int id) const { return edges_[id]; }

    // set must be sorted; returns edge id or -1.
    int find_edge(const std::vector<int>& set) const;
    bool has_edge(const std::vector<int>& set) const { return find_edge(set) >= 0; }

    static Hypergraph complete(int n, int r);

private:
    int n_;
    int r_;
    std::vector<std::vector<int>> edges_;
};

// Text format: first line "n r m_edges", then r vertices per line, strictly increasing.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph_file(const std::string& path);

} // namespace krcycle
