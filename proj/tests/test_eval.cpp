#include "ics/errors.hpp"
#include "ics/eval.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ics;

namespace {

std::vector<EventSpec> truth3() {
    return {EventSpec{{10, 10}, 1.0, 5.0, Profile::gaussian},
            EventSpec{{50, 50}, 0.8, 5.0, Profile::gaussian},
            EventSpec{{90, 90}, 0.6, 5.0, Profile::gaussian}};
}

std::vector<std::vector<double>> sources(const std::vector<EventSpec>& t) {
    std::vector<std::vector<double>> out;
    for (const auto& e : t) out.push_back(e.source);
    return out;
}

std::vector<SweepInput> small_inputs(std::size_t n_base) {
    CorpusSpec spec;
    spec.n_base = n_base;
    spec.dims = {64, 64};
    spec.min_events = 2;
    spec.max_events = 3;
    spec.sigma_min = 2.0;
    spec.sigma_max = 4.0;
    spec.noise_variants.clear();
    return to_sweep_inputs(corpus(spec, 31));
}

}  // namespace

TEST(Score, PerfectDetectionsScoreOne) {
    const auto r = score(truth3(), sources(truth3()));
    EXPECT_EQ(r.accuracy, 1.0);
    EXPECT_EQ(r.false_positives, 0u);
    EXPECT_EQ(r.r_match, 5.0);
}

TEST(Score, NoDetectionsScoreZero) {
    const auto r = score(truth3(), std::vector<std::vector<double>>{});
    EXPECT_EQ(r.accuracy, 0.0);
    EXPECT_EQ(r.matched, 0u);
}

TEST(Score, TwoOfThreeWithAStrayDetection) {
    const std::vector<std::vector<double>> det{{11, 10}, {52, 49}, {30, 70}};
    const auto r = score(truth3(), det);
    EXPECT_EQ(r.matched, 2u);
    EXPECT_DOUBLE_EQ(r.accuracy, 2.0 / 3.0);
    EXPECT_EQ(r.false_positives, 1u);
    EXPECT_EQ(r.matched, oracle::optimal_matches(sources(truth3()), det, 5.0));
    ASSERT_EQ(r.pairs.size(), 2u);
    EXPECT_EQ(r.pairs[0].truth, 0u);
    EXPECT_DOUBLE_EQ(r.pairs[1].distance, std::sqrt(5.0));
}

TEST(Score, OneDetectionClaimsOneSource) {
    const std::vector<EventSpec> t{EventSpec{{0, 0}, 1, 5, Profile::gaussian},
                                   EventSpec{{1, 0}, 1, 5, Profile::gaussian}};
    const auto r = score(t, std::vector<std::vector<double>>{{0.4, 0}, {0.6, 0}});
    EXPECT_EQ(r.matched, 2u);
    const auto r1 = score(t, std::vector<std::vector<double>>{{0.4, 0}});
    EXPECT_EQ(r1.matched, 1u);
    EXPECT_EQ(r1.pairs[0].truth, 0u);
}

TEST(Score, ErrorsForMissingTruthBadRadiusAndDimensionMismatch) {
    try {
        score({}, std::vector<std::vector<double>>{{1, 1}});
        FAIL() << "expected an error";
    } catch (const InvalidDataError& e) {
        EXPECT_NE(std::string(e.what()).find("no ground truth"), std::string::npos);
    }
    EXPECT_THROW(score(truth3(), std::vector<std::vector<double>>{{1, 1}}, 0.0), InvalidDataError);
    EXPECT_THROW(score(truth3(), std::vector<std::vector<double>>{{1, 1, 1}}), InvalidDataError);
}

TEST(Score, PropertiesOnRandomInstances) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<EventSpec> t(1 + rng() % 5);
        for (auto& e : t) e = EventSpec{{u(rng), u(rng)}, 1, 1 + u(rng) / 8, Profile::gaussian};
        std::vector<std::vector<double>> det(rng() % 7);
        for (auto& d : det) d = {u(rng), u(rng)};

        const auto r = score(t, det);
        EXPECT_GE(r.accuracy, 0.0);
        EXPECT_LE(r.accuracy, 1.0);
        EXPECT_EQ(r.accuracy * static_cast<double>(t.size()), static_cast<double>(r.matched));
        EXPECT_LE(r.matched, oracle::optimal_matches(sources(t), det, r.r_match));
        for (const auto& pr : r.pairs) EXPECT_LE(pr.distance, r.r_match);

        // permuting the truth list does not change how many detections land
        auto shuffled = t;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (det.size() <= 1) EXPECT_EQ(score(shuffled, det).matched, r.matched);

        // a larger radius never matches fewer when each detection sees every source
        const double big = 1e9;
        EXPECT_EQ(score(t, det, big).matched, std::min(t.size(), det.size()));
        EXPECT_LE(score(t, det, 0.5 * r.r_match).matched,
                  oracle::optimal_matches(sources(t), det, r.r_match));
    }
}

TEST(Axis, NamesRoundTripAndRatioRounds) {
    for (auto a : {SweepAxis::nc_ratio, SweepAxis::k0, SweepAxis::p, SweepAxis::alpha_cutoff,
                   SweepAxis::beta_c, SweepAxis::epsilon}) {
        EXPECT_EQ(parse_sweep_axis(to_string(a)), a);
    }
    EXPECT_THROW(parse_sweep_axis("gamma"), InvalidDataError);
    EXPECT_EQ(apply_axis({}, SweepAxis::nc_ratio, 2.5, 3).k0, 8u);
    EXPECT_EQ(apply_axis({}, SweepAxis::nc_ratio, 1.5, 5).k0, 8u);
    EXPECT_EQ(apply_axis({}, SweepAxis::nc_ratio, 0.01, 5).k0, 1u);
    EXPECT_EQ(apply_axis({}, SweepAxis::beta_c, 0.3, 5).beta_c, 0.3);
}

TEST(SweepSeeds, DependOnRepeatAndItemOnly) {
    EXPECT_EQ(sweep_run_seed(1, 2, 3), derive_seed(derive_seed(1, 2), 3));
    EXPECT_NE(sweep_run_seed(1, 0, 0), sweep_run_seed(1, 0, 1));
    EXPECT_NE(sweep_run_seed(1, 0, 0), sweep_run_seed(1, 1, 0));
}

TEST(Sweep, SingleRunRowEqualsDirectScore) {
    const auto items = small_inputs(1);
    SweepOptions opts;
    opts.values = {2.0};
    opts.repeats = 1;
    opts.seed = 5;
    const auto res = sweep(items, IcsConfig{}, opts);
    ASSERT_EQ(res.rows.size(), 1u);

    auto cfg = apply_axis(IcsConfig{}, SweepAxis::nc_ratio, 2.0, items[0].truth.events.size());
    cfg.rng_seed = sweep_run_seed(5, 0, 0);
    const auto direct = score(items[0].truth.events, detect(items[0].field, cfg).events);
    EXPECT_EQ(res.rows[0].mean_accuracy, direct.accuracy);
    EXPECT_EQ(res.rows[0].n_runs, 1u);
    EXPECT_EQ(res.rows[0].std_accuracy, 0.0);
}

TEST(Sweep, ParallelAndSerialRunsAgree) {
    const auto items = small_inputs(3);
    SweepOptions opts;
    opts.values = {1.0, 2.0, 3.0};
    opts.repeats = 2;
    opts.seed = 8;
    const auto serial = sweep(items, IcsConfig{}, opts);
    opts.jobs = 3;
    const auto parallel = sweep(items, IcsConfig{}, opts);
    ASSERT_EQ(serial.rows.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(serial.rows[i].value, opts.values[i]);
        EXPECT_EQ(serial.rows[i].mean_accuracy, parallel.rows[i].mean_accuracy);
        EXPECT_EQ(serial.rows[i].std_accuracy, parallel.rows[i].std_accuracy);
        EXPECT_EQ(serial.rows[i].n_runs, 6u);
        EXPECT_GE(serial.rows[i].mean_accuracy, 0.0);
        EXPECT_LE(serial.rows[i].mean_accuracy, 1.0);
    }
}

TEST(Sweep, FailedRunsAreCountedNotAveraged) {
    const auto items = small_inputs(2);
    SweepOptions opts;
    opts.axis = SweepAxis::beta_c;
    opts.values = {0.4, 2.0};
    opts.repeats = 1;
    const auto res = sweep(items, IcsConfig{}, opts);
    EXPECT_EQ(res.rows[0].n_errors, 0u);
    EXPECT_EQ(res.rows[1].n_errors, 2u);
    EXPECT_EQ(res.rows[1].n_runs, 0u);
}

TEST(Sweep, RejectsEmptyInputs) {
    SweepOptions opts;
    opts.values = {1.0};
    EXPECT_THROW(sweep({}, IcsConfig{}, opts), InvalidDataError);
    opts.values.clear();
    EXPECT_THROW(sweep(small_inputs(1), IcsConfig{}, opts), InvalidDataError);
}
