#include <cmath>

#include "dnastore/harness.hpp"
#include "doctest.h"

using namespace dnastore;

TEST_CASE("length_from_beta rounds and reports the realized beta") {
    double actual = 0;
    CHECK(length_from_beta(256, 4.0, &actual) == 32);
    CHECK(actual == doctest::Approx(4.0));
    CHECK(length_from_beta(100, 3.0, &actual) == 20);
}

TEST_CASE("identical master seeds reproduce records exactly") {
    IndexCodecExperiment e;
    e.m = 16;
    e.l = 12;
    e.outer = OuterCodeSpec{16, 12, 4};
    e.inner = InnerCodeSpec::none();
    e.sampling = SamplingSpec::single_draw(0.1);
    e.noise = NoiseSpec::identity();
    e.trials = 10;
    const auto r1 = run_index_codec(e, RandomStream(5, "exp"));
    const auto r2 = run_index_codec(e, RandomStream(5, "exp"));
    CHECK(records_to_csv(r1) == records_to_csv(r2));
    const auto r3 = run_index_codec(e, RandomStream(6, "exp"));
    CHECK(records_to_csv(r1) != records_to_csv(r3));
}

TEST_CASE("csv and json emission round-trip the same numbers") {
    TrialRecord rec;
    rec.trial = 3;
    rec.success = true;
    rec.metrics = {{"alpha", 1.5}, {"beta", -2.0}};
    const auto csv = records_to_csv({rec});
    CHECK(csv == "trial,success,alpha,beta\n3,1,1.5,-2\n");
    const auto json = records_to_json({rec});
    CHECK(json.find("\"alpha\": 1.5") != std::string::npos);
    // empty record list: header only
    CHECK(records_to_csv({}) == "trial,success\n");
}

TEST_CASE("json -> csv -> json preserves every field exactly") {
    // awkward doubles on purpose: they must survive text round trips bit-exactly
    std::vector<TrialRecord> records(3);
    RandomStream rng(17, "roundtrip");
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].trial = i;
        records[i].success = i % 2 == 0;
        records[i].metrics = {{"rate", rng.next_double() / 3.0},
                              {"cluster accuracy", 1.0 - rng.next_double() * 1e-9},
                              {"runtime_ms", 12345.678912345}};
    }
    const auto json1 = records_to_json(records);
    const auto csv = records_to_csv(records_from_json(json1));
    const auto json2 = records_to_json(records_from_csv(csv));
    CHECK(json1 == json2);
}

TEST_CASE("csv quoting survives commas and quotes in metric names") {
    TrialRecord rec;
    rec.trial = 0;
    rec.metrics = {{"odd,\"name\"", 7.0}};
    const auto csv = records_to_csv({rec});
    const auto back = records_from_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0].metrics[0].first == "odd,\"name\"");
    CHECK(back[0].metrics[0].second == 7.0);
}

TEST_CASE("tradeoff sweep holds R_s = lambda R_r and the torn sweep dominates") {
    const auto t = sweep_tradeoff(5.0, 0.5, 4.0, 8);
    for (const auto& row : t.rows)
        CHECK(row[1] == doctest::Approx(row[0] * row[2]).epsilon(1e-12));

    // e^{-1/beta} >= (1 - 1/beta)^+ everywhere on the grid
    const auto torn = sweep_torn_vs_shuffling(0.2, 10.0, 50);
    for (const auto& row : torn.rows) CHECK(row[1] >= row[2] - 1e-12);
}

TEST_CASE("regime boundary sweeps match the closed-form points") {
    const auto bsc = sweep_bsc_regime_boundary(0.01, 0.01, 1);
    CHECK(bsc.rows[0][1] == doctest::Approx(2.329).epsilon(1e-3));

    const auto bec = sweep_bec_regime_boundaries(0.1, 0.1, 1);
    CHECK(bec.rows[0][1] == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(bec.rows[0][2] == doctest::Approx(1.335).epsilon(1e-3));
}

TEST_CASE("summaries aggregate successes") {
    std::vector<TrialRecord> records(10);
    for (std::size_t i = 0; i < records.size(); ++i) records[i].success = i < 7;
    const auto s = summarize(records);
    CHECK(s.trials == 10);
    CHECK(s.successes == 7);
    CHECK(s.success_rate == doctest::Approx(0.7));
}

TEST_CASE("torn coverage runner produces sensible stats") {
    TornCoverageExperiment e;
    e.n = 1 << 14;
    e.spec = TornSpec::geometric(1.0 / 14.0);
    e.trials = 5;
    const auto records = run_torn_coverage(e, RandomStream(7, "torn"));
    for (const auto& r : records) {
        const double coverage = r.metrics[0].second;
        CHECK(coverage > 0.0);
        CHECK(coverage <= 1.0);
    }
}
