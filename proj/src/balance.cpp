#include "krcycle/balance.hpp"

#include <cmath>
#include <stdexcept>

namespace krcycle {

Rational d1(const PatternGraph& f) {
    return Rational(f.edge_count(), f.vertex_count() - 1);
}

BalanceResult is_strictly_one_balanced(const PatternGraph& f) {
    const int v = f.vertex_count();
    if (v > 8) throw std::invalid_argument("is_strictly_one_balanced: v > 8");
    const Rational target = d1(f);

    // induced subgraphs on proper vertex subsets, smallest bitmask first
    for (unsigned mask = 0; mask + 1 < (1u << v); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> vertices;
        for (int i = 0; i < v; ++i)
            if (mask & (1u << i)) vertices.push_back(i);
        std::vector<std::pair<int, int>> induced;
        for (auto [a, b] : f.edges())
            if ((mask & (1u << a)) && (mask & (1u << b))) induced.emplace_back(a, b);
        Rational dsub(static_cast<long long>(induced.size()),
                      static_cast<long long>(vertices.size()) - 1);
        if (dsub >= target) {
            BalanceWitness w{std::move(vertices), std::move(induced), dsub};
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

ThresholdReport kr_threshold(long long n, int r) {
    if (n < 2) throw std::invalid_argument("kr_threshold: n must be >= 2");
    if (r < 3) throw std::invalid_argument("kr_threshold: r must be >= 3");
    ThresholdReport rep;
    rep.n_exponent = Rational(-2, r);
    long long choose2 = static_cast<long long>(r) * (r - 1) / 2;
    rep.log_exponent = Rational(1, choose2);
    rep.pi_n_exponent = Rational(1 - r);
    rep.pi_log_exponent = Rational(1);
    double raw = std::pow(static_cast<double>(n), rep.n_exponent.to_double()) *
                 std::pow(std::log(static_cast<double>(n)), rep.log_exponent.to_double());
    ClampedProb c = clamp_probability(raw);
    rep.p = c.value;
    rep.clamped = c.clamped;
    return rep;
}

CouplingPi coupling_pi(double p, const PatternGraph& f) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("coupling_pi: p must be in [0,1]");
    CouplingPi out;
    out.edge_exponent = f.edge_count();
    out.pi = std::pow(p, static_cast<double>(out.edge_exponent));
    out.a_exact = f.is_complete();
    return out;
}

ClampedProb loose_hc_threshold_pi(long long n, int r, double omega) {
    if (n < 2) throw std::invalid_argument("loose_hc_threshold_pi: n must be >= 2");
    if (omega < 0.0) throw std::invalid_argument("loose_hc_threshold_pi: omega must be >= 0");
    return clamp_probability(omega * std::pow(static_cast<double>(n), static_cast<double>(1 - r)) *
                             std::log(static_cast<double>(n)));
}

ClampedProb overlap2_hc_threshold_pi(long long n, double omega) {
    if (n < 2) throw std::invalid_argument("overlap2_hc_threshold_pi: n must be >= 2");
    return clamp_probability(omega * std::pow(static_cast<double>(n), -2.0));
}

ModelParams threshold_model_params(int n, int r, double omega) {
    if (omega < 0.0) throw std::invalid_argument("threshold_model_params: omega must be >= 0");
    ModelParams mp;
    mp.n = n;
    mp.r = r;
    mp.omega = omega;
    ClampedProb p = clamp_probability(omega * kr_threshold(n, r).p);
    mp.p = p.value;
    mp.p_clamped = p.clamped;
    ClampedProb pi = loose_hc_threshold_pi(n, r, omega);
    mp.pi = pi.value;
    mp.pi_clamped = pi.clamped;
    return mp;
}

FirstMomentReport f_cycle_first_moment(const PatternGraph& f, int overlap, int shared_edges) {
    const int vf = f.vertex_count();
    const int ef = f.edge_count();
    if (overlap < 1 || overlap >= vf)
        throw std::invalid_argument("f_cycle_first_moment: need 1 <= overlap < |V(F)|");
    if (shared_edges < 0 || shared_edges > ef)
        throw std::invalid_argument("f_cycle_first_moment: shared_edges out of range");
    if (shared_edges == ef)
        throw std::invalid_argument("f_cycle_first_moment: degenerate, every edge shared");

    // m = n/(v_F - o) copies contribute m(e_F - s) edges; n! p^{m(e_F - s)} ~ 1
    // with log n! ~ n log n gives p ~ n^{-(v_F - o)/(e_F - s)}
    FirstMomentReport rep;
    rep.p_exponent = Rational(-(vf - overlap), ef - shared_edges);
    rep.pi_exponent = rep.p_exponent * Rational(ef);
    rep.below_overlap2_threshold = rep.pi_exponent < Rational(-2);
    return rep;
}

} // namespace krcycle
