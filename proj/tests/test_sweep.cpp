#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "krcycle/sweep.hpp"

using namespace krcycle;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.n_list = {6};
    cfg.r = 3;
    cfg.omega_list = {1.0};
    cfg.trials = 5;
    cfg.base_seed = 1;
    return cfg;
}

} // namespace

TEST_CASE("wilson95 against reference values") {
    auto w0 = wilson95(0, 10);
    CHECK(w0.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w0.hi == doctest::Approx(0.2775327998628892).epsilon(1e-9));
    auto w10 = wilson95(10, 0);
    CHECK(w10.lo == doctest::Approx(0.7224672001371107).epsilon(1e-9));
    CHECK(w10.hi == doctest::Approx(1.0).epsilon(1e-9));
    auto w5 = wilson95(5, 5);
    CHECK(w5.lo == doctest::Approx(0.236593090512564).epsilon(1e-9));
    CHECK(w5.hi == doctest::Approx(0.7634069094874361).epsilon(1e-9));
    CHECK_THROWS_AS(wilson95(0, 0), std::invalid_argument);
}

TEST_CASE("clamped omega extremes give probability 1 and 0") {
    SweepConfig cfg = small_config();
    cfg.omega_list = {1e6};
    auto records = run_sweep(cfg);
    REQUIRE(records.size() == 5);
    for (const auto& rec : records) {
        CHECK(rec.p == 1.0);
        CHECK(rec.clamped);
        CHECK(rec.status == SearchStatus::found); // complete graph
    }
    auto summary = summarize(records);
    REQUIRE(summary.size() == 1);
    CHECK(summary[0].probability == 1.0);

    cfg.omega_list = {0.0};
    records = run_sweep(cfg);
    for (const auto& rec : records) {
        CHECK(rec.p == 0.0);
        CHECK(rec.status == SearchStatus::none); // empty graph
        CHECK(rec.uncovered == 6);
    }
    CHECK(summarize(records)[0].probability == 0.0);
}

TEST_CASE("config validation fires before any trial") {
    SweepConfig cfg = small_config();
    cfg.n_list = {};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.n_list = {7}; // (r-1) does not divide n
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.omega_list = {-1.0};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.mode = SweepMode::coverage;
    cfg.n_list = {7}; // fine outside cycle modes
    CHECK_NOTHROW(run_sweep(cfg));
}

TEST_CASE("records are ordered, conserved, and reproducible byte for byte") {
    SweepConfig cfg;
    cfg.n_list = {6, 12};
    cfg.r = 3;
    cfg.omega_list = {0.5, 1.0, 2.0};
    cfg.trials = 10;
    cfg.base_seed = 7;
    auto records = run_sweep(cfg);
    REQUIRE(records.size() == 2 * 3 * 10);

    for (std::size_t i = 1; i < records.size(); ++i) {
        auto key = [](const SweepRecord& r) { return std::make_tuple(r.n, r.omega, r.trial); };
        CHECK(key(records[i - 1]) < key(records[i]));
    }

    auto summary = summarize(records);
    REQUIRE(summary.size() == 6);
    for (const auto& s : summary) CHECK(s.found + s.none + s.unknown == s.trials);

    std::ostringstream csv1, csv2;
    write_records_csv(csv1, records);
    write_records_csv(csv2, run_sweep(cfg));
    CHECK(csv1.str() == csv2.str());
    CHECK(csv1.str().rfind("n,r,omega,p,trial,seed,status,uncovered,nodes,elapsed_ms,clamped\n", 0) == 0);
}

TEST_CASE("seeds are shared across the omega grid, never across trials") {
    SweepConfig cfg;
    cfg.n_list = {6};
    cfg.r = 3;
    cfg.omega_list = {0.5, 2.0};
    cfg.trials = 3;
    cfg.base_seed = 11;
    auto records = run_sweep(cfg);
    std::map<std::pair<double, int>, std::uint64_t> seed_of;
    for (const auto& rec : records) seed_of[{rec.omega, rec.trial}] = rec.seed;
    for (int t = 0; t < 3; ++t)
        CHECK(seed_of[{0.5, t}] == seed_of[{2.0, t}]);
    CHECK(seed_of[{0.5, 0}] != seed_of[{0.5, 1}]);
}

TEST_CASE("coupled dominance: per-trial outcomes nondecreasing in omega") {
    SweepConfig cfg;
    cfg.n_list = {12};
    cfg.r = 3;
    cfg.omega_list = {0.5, 1.0, 2.0};
    cfg.trials = 30;
    cfg.base_seed = 3;
    auto records = run_sweep(cfg);
    std::map<int, std::map<double, SearchStatus>> by_trial;
    for (const auto& rec : records) by_trial[rec.trial][rec.omega] = rec.status;
    for (auto& [trial, by_omega] : by_trial) {
        (void)trial;
        bool prev_found = false;
        for (auto& [omega, status] : by_omega) {
            (void)omega;
            REQUIRE(status != SearchStatus::budget_exhausted);
            bool found = status == SearchStatus::found;
            if (prev_found) CHECK(found);
            prev_found = found;
        }
    }
}

TEST_CASE("loose-hc mode runs on the hypergraph side") {
    SweepConfig cfg;
    cfg.n_list = {8};
    cfg.r = 3;
    cfg.omega_list = {0.0, 100.0};
    cfg.trials = 4;
    cfg.base_seed = 9;
    cfg.mode = SweepMode::loose_hc;
    auto records = run_sweep(cfg);
    auto summary = summarize(records);
    REQUIRE(summary.size() == 2);
    CHECK(summary[0].probability == 0.0); // omega = 0: empty hypergraph
    CHECK(summary[0].p == 0.0);
    CHECK(summary[1].probability == 1.0); // pi clamps to 1: complete hypergraph
    CHECK(summary[1].clamped);
}

TEST_CASE("coverage mode counts uncovered vertices") {
    SweepConfig cfg;
    cfg.n_list = {10};
    cfg.r = 3;
    cfg.omega_list = {0.0, 1e6};
    cfg.trials = 3;
    cfg.base_seed = 13;
    cfg.mode = SweepMode::coverage;
    auto records = run_sweep(cfg);
    for (const auto& rec : records) {
        CHECK(rec.nodes == 0);
        if (rec.omega == 0.0) {
            CHECK(rec.uncovered == 10);
            CHECK(rec.status == SearchStatus::none);
        } else {
            CHECK(rec.uncovered == 0);
            CHECK(rec.status == SearchStatus::found);
        }
    }
}

TEST_CASE("summarize rejects empty and mixed input") {
    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
    SweepRecord a;
    a.n = 6;
    a.r = 3;
    SweepRecord b = a;
    b.r = 4;
    CHECK_THROWS_AS(summarize({a, b}), std::invalid_argument);
}

TEST_CASE("summary probability excludes unknowns from the denominator") {
    SweepRecord base;
    base.n = 6;
    base.r = 3;
    base.omega = 1.0;
    base.p = 0.5;
    std::vector<SweepRecord> records;
    for (int t = 0; t < 6; ++t) {
        SweepRecord rec = base;
        rec.trial = t;
        rec.status = t < 2   ? SearchStatus::found
                     : t < 4 ? SearchStatus::none
                             : SearchStatus::budget_exhausted;
        records.push_back(rec);
    }
    auto summary = summarize(records);
    REQUIRE(summary.size() == 1);
    CHECK(summary[0].found == 2);
    CHECK(summary[0].none == 2);
    CHECK(summary[0].unknown == 2);
    CHECK(summary[0].probability == doctest::Approx(0.5));

    // all-unknown point: probability is NaN, not 0 or 1
    for (auto& rec : records) rec.status = SearchStatus::budget_exhausted;
    auto s2 = summarize(records);
    CHECK(std::isnan(s2[0].probability));
}

TEST_CASE("timing is suppressed unless requested") {
    SweepConfig cfg = small_config();
    auto records = run_sweep(cfg);
    for (const auto& rec : records) CHECK(rec.elapsed_ms == 0);
}

TEST_CASE("format_double keeps shortest round-trip form") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    double x = 0.017670394897578495;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("json report carries config, records and summary") {
    SweepConfig cfg = small_config();
    auto records = run_sweep(cfg);
    auto summary = summarize(records);
    auto j = sweep_report_json(cfg, records, summary);
    CHECK(j["config"]["mode"] == "kr-cycle");
    CHECK(j["records"].size() == records.size());
    CHECK(j["summary"].size() == summary.size());
    CHECK(j["records"][0].contains("seed"));
}
