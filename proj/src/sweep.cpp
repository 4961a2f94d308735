#include "krcycle/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "krcycle/balance.hpp"
#include "krcycle/cliques.hpp"
#include "krcycle/random_models.hpp"

namespace krcycle {

const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::kr_cycle: return "kr-cycle";
        case SweepMode::loose_hc: return "loose-hc";
        case SweepMode::coverage: return "coverage";
    }
    return "?";
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

WilsonInterval wilson95(int successes, int failures) {
    if (successes < 0 || failures < 0 || successes + failures == 0)
        throw std::invalid_argument("wilson95: need a positive number of trials");
    constexpr double z = 1.959963984540054;
    const double n = successes + failures;
    const double phat = successes / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

void validate(const SweepConfig& cfg) {
    if (cfg.n_list.empty()) throw std::invalid_argument("sweep: empty n list");
    if (cfg.omega_list.empty()) throw std::invalid_argument("sweep: empty omega list");
    if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (cfg.r < 3) throw std::invalid_argument("sweep: r must be >= 3");
    if (cfg.budget.node_limit <= 0 || cfg.budget.time_limit_ms <= 0)
        throw std::invalid_argument("sweep: budget limits must be positive");
    for (double omega : cfg.omega_list)
        if (!(omega >= 0.0)) throw std::invalid_argument("sweep: omega must be >= 0");
    for (int n : cfg.n_list) {
        if (n < 2) throw std::invalid_argument("sweep: n must be >= 2");
        if (cfg.mode != SweepMode::coverage) {
            if (n % (cfg.r - 1) != 0)
                throw std::invalid_argument("sweep: (r-1) must divide every n in cycle modes");
            if (n < 3 * (cfg.r - 1))
                throw std::invalid_argument("sweep: need n >= 3(r-1) in cycle modes");
        }
    }
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<SweepRecord> records;
    records.reserve(cfg.n_list.size() * cfg.omega_list.size() * cfg.trials);

    for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
        const int n = cfg.n_list[ni];
        for (double omega : cfg.omega_list) {
            ModelParams mp = threshold_model_params(n, cfg.r, omega);
            for (int trial = 0; trial < cfg.trials; ++trial) {
                // the seed ignores omega on purpose: the whole omega grid
                // shares one weight stream per (n, trial), which makes
                // per-trial outcomes exactly monotone in omega
                std::uint64_t seed =
                    derive_seed(cfg.base_seed, static_cast<std::uint64_t>(ni) * cfg.trials + trial);

                SweepRecord rec;
                rec.n = n;
                rec.r = cfg.r;
                rec.omega = omega;
                rec.trial = trial;
                rec.seed = seed;

                if (cfg.mode == SweepMode::loose_hc) {
                    rec.p = mp.pi;
                    rec.clamped = mp.pi_clamped;
                    WeightAssignment w(n, WeightKind::rset_weights, seed, cfg.r);
                    Hypergraph h = hypergraph_at(w, mp.pi, cfg.r);
                    auto outcome = find_loose_hc(h, cfg.budget);
                    rec.status = outcome.status;
                    rec.nodes = outcome.stats.nodes;
                    rec.elapsed_ms = outcome.stats.elapsed_ms;
                    std::vector<char> covered(n, 0);
                    for (const auto& e : h.edges())
                        for (int v : e) covered[v] = 1;
                    rec.uncovered = static_cast<int>(std::count(covered.begin(), covered.end(), 0));
                } else {
                    rec.p = mp.p;
                    rec.clamped = mp.p_clamped;
                    WeightAssignment w(n, WeightKind::pair_weights, seed);
                    Graph g = graph_at(w, mp.p);
                    if (cfg.mode == SweepMode::kr_cycle) {
                        auto outcome = find_spanning_kr_cycle(g, cfg.r, cfg.budget);
                        rec.status = outcome.status;
                        rec.uncovered = outcome.uncovered_count;
                        rec.nodes = outcome.stats.nodes;
                        rec.elapsed_ms = outcome.stats.elapsed_ms;
                    } else { // coverage: does every vertex lie in some K_r?
                        rec.uncovered = static_cast<int>(uncovered_vertices(g, cfg.r).size());
                        rec.status = rec.uncovered == 0 ? SearchStatus::found : SearchStatus::none;
                    }
                }
                if (!cfg.timing) rec.elapsed_ms = 0;
                records.push_back(rec);
            }
        }
    }

    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.n, a.omega, a.trial) < std::tie(b.n, b.omega, b.trial);
    });
    return records;
}

std::vector<PointSummary> summarize(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: empty record set");
    const int r = records.front().r;
    std::map<std::pair<int, double>, PointSummary> points;
    for (const auto& rec : records) {
        if (rec.r != r) throw std::invalid_argument("summarize: records mix different r");
        auto key = std::make_pair(rec.n, rec.omega);
        auto [it, fresh] = points.try_emplace(key);
        PointSummary& s = it->second;
        if (fresh) {
            s.n = rec.n;
            s.r = rec.r;
            s.omega = rec.omega;
            s.p = rec.p;
            s.clamped = rec.clamped;
        } else if (s.p != rec.p || s.clamped != rec.clamped) {
            throw std::invalid_argument("summarize: records disagree on per-point parameters");
        }
        ++s.trials;
        switch (rec.status) {
            case SearchStatus::found: ++s.found; break;
            case SearchStatus::none: ++s.none; break;
            case SearchStatus::budget_exhausted: ++s.unknown; break;
        }
    }
    std::vector<PointSummary> out;
    out.reserve(points.size());
    for (auto& [key, s] : points) {
        (void)key;
        const int decided = s.found + s.none;
        if (decided > 0) {
            s.probability = static_cast<double>(s.found) / decided;
            WilsonInterval w = wilson95(s.found, s.none);
            s.wilson_lo = w.lo;
            s.wilson_hi = w.hi;
        } else {
            s.probability = s.wilson_lo = s.wilson_hi = std::nan("");
        }
        out.push_back(s);
    }
    return out;
}

void write_records_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "n,r,omega,p,trial,seed,status,uncovered,nodes,elapsed_ms,clamped\n";
    for (const auto& rec : records) {
        out << rec.n << ',' << rec.r << ',' << format_double(rec.omega) << ','
            << format_double(rec.p) << ',' << rec.trial << ',' << rec.seed << ','
            << to_string(rec.status) << ',' << rec.uncovered << ',' << rec.nodes << ','
            << rec.elapsed_ms << ',' << (rec.clamped ? 1 : 0) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<PointSummary>& summary) {
    out << "n,r,omega,p,trials,found,none,unknown,probability,wilson_lo,wilson_hi,clamped\n";
    for (const auto& s : summary) {
        out << s.n << ',' << s.r << ',' << format_double(s.omega) << ',' << format_double(s.p)
            << ',' << s.trials << ',' << s.found << ',' << s.none << ',' << s.unknown << ','
            << format_double(s.probability) << ',' << format_double(s.wilson_lo) << ','
            << format_double(s.wilson_hi) << ',' << (s.clamped ? 1 : 0) << '\n';
    }
}

nlohmann::json to_json(const SweepRecord& rec) {
    return {
        {"n", rec.n},
        {"r", rec.r},
        {"omega", rec.omega},
        {"p", rec.p},
        {"trial", rec.trial},
        {"seed", rec.seed},
        {"status", to_string(rec.status)},
        {"uncovered", rec.uncovered},
        {"nodes", rec.nodes},
        {"elapsed_ms", rec.elapsed_ms},
        {"clamped", rec.clamped},
    };
}

nlohmann::json to_json(const PointSummary& s) {
    nlohmann::json j{
        {"n", s.n},
        {"r", s.r},
        {"omega", s.omega},
        {"p", s.p},
        {"trials", s.trials},
        {"found", s.found},
        {"none", s.none},
        {"unknown", s.unknown},
        {"clamped", s.clamped},
    };
    if (std::isnan(s.probability)) {
        j["probability"] = nullptr;
        j["wilson_lo"] = nullptr;
        j["wilson_hi"] = nullptr;
    } else {
        j["probability"] = s.probability;
        j["wilson_lo"] = s.wilson_lo;
        j["wilson_hi"] = s.wilson_hi;
    }
    return j;
}

nlohmann::json sweep_report_json(const SweepConfig& cfg, const std::vector<SweepRecord>& records,
                                 const std::vector<PointSummary>& summary) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) recs.push_back(to_json(r));
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& s : summary) sums.push_back(to_json(s));
    return {
        {"config",
         {
             {"mode", to_string(cfg.mode)},
             {"n", cfg.n_list},
             {"r", cfg.r},
             {"omega", cfg.omega_list},
             {"trials", cfg.trials},
             {"seed", cfg.base_seed},
             {"node_limit", cfg.budget.node_limit},
             {"time_limit_ms", cfg.budget.time_limit_ms},
             {"timing", cfg.timing},
         }},
        {"records", recs},
        {"summary", sums},
    };
}

} // namespace krcycle
