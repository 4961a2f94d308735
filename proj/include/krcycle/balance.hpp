#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "krcycle/pattern.hpp"
#include "krcycle/random_models.hpp"
#include "krcycle/rational.hpp"

namespace krcycle {

// 1-density d1(F) = |E(F)| / (|V(F)| - 1), exact.
Rational d1(const PatternGraph& f);

struct BalanceWitness {
    std::vector<int> vertices;              // vertex set of the offending subgraph
    std::vector<std::pair<int, int>> edges; // its induced edges
    Rational d1_value;
};

struct BalanceResult {
    bool strictly_1_balanced = false;
    std::optional<BalanceWitness> witness; // present iff not strictly 1-balanced
};

// Brute force over all induced subgraphs on proper vertex subsets with at
// least 2 vertices (v <= 8). A witness is the first subgraph found with
// d1(F') >= d1(F); subgraphs with fewer edges than the induced one can only
// have smaller d1, so induced subgraphs suffice.
BalanceResult is_strictly_one_balanced(const PatternGraph& f);

// p = n^{-2/r} (log n)^{1/C(r,2)}, with the exponents carried exactly and
// the numeric value evaluated (and clamped) only at the end. pi_* carry the
// exact exponents of p^{C(r,2)} = n^{1-r} log n.
struct ThresholdReport {
    Rational n_exponent;      // -2/r
    Rational log_exponent;    // 1/C(r,2)
    Rational pi_n_exponent;   // 1-r
    Rational pi_log_exponent; // 1
    double p = 0.0;           // numeric value at the given n, clamped to [0,1]
    bool clamped = false;
};

ThresholdReport kr_threshold(long long n, int r); // n >= 2, r >= 3

// pi = a p^{|E(F)|} with a = 1. a = 1 is exact for complete F; for other
// patterns it is this workbench's normalization and a_exact is false.
struct CouplingPi {
    double pi = 0.0;
    int edge_exponent = 0;
    bool a_exact = false;
};

CouplingPi coupling_pi(double p, const PatternGraph& f);

// pi = omega n^{1-r} log n, clamped to [0,1].
ClampedProb loose_hc_threshold_pi(long long n, int r, double omega);

// Both threshold formulas evaluated at multiplier omega for one grid point.
ModelParams threshold_model_params(int n, int r, double omega);

// pi = omega n^{-2}, the reference threshold for overlap-2 cycles.
ClampedProb overlap2_hc_threshold_pi(long long n, double omega);

// First-moment heuristic for spanning F-cycles where adjacent copies share
// `overlap` vertices and `shared_edges` edges: n/(v_F - overlap) copies,
// n! p^{m (e_F - shared_edges)} ~ 1 with log n! ~ n log n, so
//   p ~ n^{-(v_F - overlap)/(e_F - shared_edges)},  pi ~ p^{e_F}.
// below_overlap2_threshold flags pi_exponent < -2.
struct FirstMomentReport {
    Rational p_exponent;
    Rational pi_exponent;
    bool below_overlap2_threshold = false;
};

FirstMomentReport f_cycle_first_moment(const PatternGraph& f, int overlap, int shared_edges);

} // namespace krcycle
