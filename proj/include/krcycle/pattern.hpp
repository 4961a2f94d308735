#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace krcycle {

// Small labeled connected simple graph F, the building block of F-cycles.
// Kept tiny on purpose (automorphism and subgraph sweeps are brute force).
class PatternGraph {
public:
    // Throws std::invalid_argument unless F is simple, connected, v >= 2.
    PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    bool is_complete() const;

    static PatternGraph complete(int r);
    static PatternGraph cycle(int k);
    static PatternGraph path(int k);
    static PatternGraph complete_minus_edge(int r);

    // All edge-preserving vertex permutations, brute force (v <= 8).
    std::vector<std::vector<int>> automorphisms() const;

    // orbit id per vertex under the automorphism group; ids are assigned in
    // ascending order of each orbit's smallest vertex.
    std::vector<int> automorphism_orbits() const;

private:
    int v_;
    std::vector<std::pair<int, int>> edges_; // u < v, sorted
};

// Same text format as graphs: "n m_edges" then "u v" per line.
PatternGraph read_pattern(std::istream& in);
PatternGraph read_pattern_file(const std::string& path);

} // namespace krcycle
