#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "krcycle/solver.hpp"

namespace krcycle {

enum class SweepMode { kr_cycle, loose_hc, coverage };

const char* to_string(SweepMode m);

// One Monte Carlo sweep over a grid of (n, omega) points. In every mode the
// probability parameter is the threshold formula scaled by omega:
//   kr-cycle / coverage:  p  = omega * n^{-2/r} (log n)^{1/C(r,2)} on G_{n,p}
//   loose-hc:             pi = omega * n^{1-r} log n on H_{n,pi;r}
// Trial seeds derive from (base_seed, n-index, trial) only, never from
// omega, so the whole omega grid reuses one weight stream per trial and
// outcomes are coupled exactly.
struct SweepConfig {
    std::vector<int> n_list;
    int r = 3;
    std::vector<double> omega_list;
    int trials = 1;
    std::uint64_t base_seed = 0;
    SearchBudget budget;
    SweepMode mode = SweepMode::kr_cycle;
    bool timing = false; // measured elapsed_ms breaks byte-reproducibility; off by default
};

struct SweepRecord {
    int n = 0;
    int r = 0;
    double omega = 0.0;
    double p = 0.0; // pi in loose-hc mode
    int trial = 0;
    std::uint64_t seed = 0;
    SearchStatus status = SearchStatus::none;
    int uncovered = 0;
    long long nodes = 0;
    long long elapsed_ms = 0;
    bool clamped = false;
};

struct PointSummary {
    int n = 0;
    int r = 0;
    double omega = 0.0;
    double p = 0.0;
    int trials = 0;
    int found = 0;
    int none = 0;
    int unknown = 0;      // budget_exhausted; excluded from the probability denominator
    double probability = 0.0; // found / (found + none); NaN when the denominator is 0
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    bool clamped = false;
};

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// 95% Wilson score interval for successes out of (successes + failures).
WilsonInterval wilson95(int successes, int failures);

// Validates the config up front (nonempty lists, trials >= 1, divisibility
// in cycle modes) and throws std::invalid_argument before any trial runs.
// Records come back sorted by (n, omega, trial).
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

// Per-point aggregation. Throws on an empty record set or on records that
// disagree on r or on any per-point parameter.
std::vector<PointSummary> summarize(const std::vector<SweepRecord>& records);

// CSV header: n,r,omega,p,trial,seed,status,uncovered,nodes,elapsed_ms,clamped
void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<PointSummary>& summary);

nlohmann::json to_json(const SweepRecord& rec);
nlohmann::json to_json(const PointSummary& s);
nlohmann::json sweep_report_json(const SweepConfig& cfg, const std::vector<SweepRecord>& records,
                                 const std::vector<PointSummary>& summary);

// Shortest round-trip decimal formatting; used for every double that lands
// in CSV output so identical runs stay byte-identical.
std::string format_double(double x);

} // namespace krcycle
