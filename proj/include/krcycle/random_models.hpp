#pragma once

#include <cstdint>
#include <vector>

#include "krcycle/graph.hpp"
#include "krcycle/hypergraph.hpp"

namespace krcycle {

// Normative RNG for every experiment in this project: splitmix64 in counter
// mode. weight(seed, slot) is one splitmix64 step seeded with
// seed + slot * 0x9E3779B97F4A7C15, with the 53 high output bits read as a
// dyadic rational in [0,1). No other random source is allowed anywhere; this
// keeps runs bit-exact across implementations and platforms (pinned by the
// golden weight file under data/).
inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t slot_raw(std::uint64_t seed, std::uint64_t slot) {
    return splitmix64_mix(seed + slot * kSplitmixGamma + kSplitmixGamma);
}

constexpr double slot_weight(std::uint64_t seed, std::uint64_t slot) {
    return static_cast<double>(slot_raw(seed, slot) >> 11) * 0x1.0p-53;
}

// Per-trial seeds are derived from a base seed and a running counter through
// the same mix.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t counter) {
    return slot_raw(base_seed, counter);
}

// Slot index of the unordered pair {i, j}, i < j, within 0..C(n,2)-1.
// Fixed as i*n - i(i+1)/2 + (j - i - 1). Throws on out-of-range vertices.
std::uint64_t pair_index(int i, int j, int n);

// C(n, k) in exact 64-bit arithmetic; throws std::overflow_error if it
// does not fit.
std::uint64_t binomial(int n, int k);

// Colexicographic rank of a sorted r-set: sum of C(set[k], k+1).
std::uint64_t rset_rank_colex(const std::vector<int>& set);

enum class WeightKind { pair_weights, rset_weights };

// Immutable coupling representation of G_{n,p} (or H_{n,pi;r}) across all
// probabilities at once: each slot carries a fixed weight in [0,1), and the
// instance at probability p keeps the slots with weight < p. Existence of a
// monotone structure is then monotone in p within a trial, exactly.
class WeightAssignment {
public:
    WeightAssignment(int n, WeightKind kind, std::uint64_t seed, int r = 0);

    int n() const { return n_; }
    int r() const { return r_; }
    WeightKind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    double weight_at(std::uint64_t slot) const { return slot_weight(seed_, slot); }

private:
    int n_;
    int r_;
    WeightKind kind_;
    std::uint64_t seed_;
};

// Edge {i,j} present iff weight(pair_index(i,j)) < p. Monotone in p.
Graph graph_at(const WeightAssignment& w, double p);

// Hyperedge e present iff weight(colex rank of e) < pi. Monotone in pi.
Hypergraph hypergraph_at(const WeightAssignment& w, double pi, int r);

struct ClampedProb {
    double value = 0.0;
    bool clamped = false;
};

// Threshold formulas at desk scale routinely leave [0,1]; out-of-range
// values are clamped and flagged rather than rejected.
ClampedProb clamp_probability(double x);

// One grid point of an experiment: both model probabilities at multiplier
// omega, clamped into [0,1] with the clamping flagged.
struct ModelParams {
    int n = 0;
    int r = 3;
    double omega = 1.0;
    double p = 0.0;   // graph side: omega * n^{-2/r} (log n)^{1/C(r,2)}
    double pi = 0.0;  // hypergraph side: omega * n^{1-r} log n
    bool p_clamped = false;
    bool pi_clamped = false;
};

} // namespace krcycle
