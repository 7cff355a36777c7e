#include "ics/clustering.hpp"
#include "ics/errors.hpp"
#include "ics/synth.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ics;

TEST(Phi, ExponentialOfScaledAmplitude) {
    EXPECT_EQ(phi(0.0, {16.0}), 1.0);
    EXPECT_EQ(phi(0.0, {3.5}), 1.0);
    EXPECT_EQ(phi(0.7, {0.0}), 1.0);
    // e^16 to 24 significant digits
    const double e16 = 8886110.52050787263676302374;
    EXPECT_NEAR(phi(1.0, {16.0}) / e16, 1.0, 1e-12);
}

TEST(Assign, SingleCentroidTakesEveryPoint) {
    std::mt19937_64 rng(4);
    const auto ps = oracle::random_point_set(rng, 30, 2);
    const auto a = assign(ps, CentroidSet(2, {1.0, 1.0}), {16.0});
    for (auto v : a) EXPECT_EQ(v, 0u);
}

TEST(Assign, MatchesBruteForceArgmin) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ndim = 1 + trial % 3;
        const auto ps = oracle::random_point_set(rng, 50, ndim);
        std::vector<double> c(4 * ndim);
        for (auto& v : c) v = std::uniform_real_distribution<double>(0, 10)(rng);
        const CentroidSet cents(ndim, c);
        const double p = std::uniform_real_distribution<double>(0, 20)(rng);
        EXPECT_EQ(assign(ps, cents, {p}), oracle::brute_force_assign(ps, cents, p))
            << "trial " << trial;
    }
}

TEST(Assign, IndependentOfAmplitudeExponent) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ps = oracle::random_point_set(rng, 80, 2);
        std::vector<double> c(10);
        for (auto& v : c) v = std::uniform_real_distribution<double>(0, 10)(rng);
        const CentroidSet cents(2, c);
        const auto base = assign(ps, cents, {0.0});
        for (double p : {0.5, 4.0, 13.0, 16.0, 17.0, 30.0}) {
            EXPECT_EQ(assign(ps, cents, {p}), base);
        }
    }
}

TEST(Assign, TiesGoToLowestIndex) {
    PointSet ps(1, {1.0}, {0.5});
    EXPECT_EQ(assign(ps, CentroidSet(1, {0.0, 2.0}), {16.0})[0], 0u);
}

TEST(Update, TwoPointHandArithmetic) {
    // weights 0.25^2 = 0.0625 and 0.75^2 = 0.5625 -> c = 0.5625 / 0.625 = 0.9
    PointSet ps(1, {0.0, 1.0}, {0.0, 1.0});
    const auto c = update_centroids(ps, {0, 0}, CentroidSet(1, {0.25}), {0.0});
    EXPECT_NEAR(c[0][0], 0.9, 1e-15);
}

TEST(Update, SinglePointClusterMovesOntoThePoint) {
    PointSet ps(2, {3.0, -1.0}, {0.4});
    const auto c = update_centroids(ps, {0}, CentroidSet(2, {0.0, 0.0}), {16.0});
    EXPECT_DOUBLE_EQ(c[0][0], 3.0);
    EXPECT_DOUBLE_EQ(c[0][1], -1.0);
}

TEST(Update, ZeroWeightAndEmptyClustersKeepTheirCentroid) {
    PointSet ps(1, {2.0, 2.0}, {0.1, 0.9});
    const auto c = update_centroids(ps, {0, 0}, CentroidSet(1, {2.0, 8.0}), {16.0});
    EXPECT_EQ(c[0][0], 2.0);
    EXPECT_EQ(c[1][0], 8.0);
}

TEST(Update, UsesAmplitudeWeighting) {
    PointSet ps(1, {0.0, 1.0}, {0.0, 1.0});
    const auto c = update_centroids(ps, {0, 0}, CentroidSet(1, {0.5}), {16.0});
    const double w1 = std::exp(16.0) * 0.25;
    EXPECT_NEAR(c[0][0], w1 / (0.25 + w1), 1e-15);
}

TEST(Update, RejectsInconsistentAssignment) {
    PointSet ps(1, {0.0, 1.0}, {0.0, 1.0});
    EXPECT_THROW(update_centroids(ps, {0}, CentroidSet(1, {0.5}), {16.0}), InvalidDataError);
    EXPECT_THROW(update_centroids(ps, {0, 3}, CentroidSet(1, {0.5}), {16.0}), InvalidDataError);
}

TEST(Objective, SumsWeightedSquaredDistances) {
    PointSet ps(1, {0.0, 2.0}, {0.0, 0.5});
    const double r = objective(ps, {0, 0}, CentroidSet(1, {1.0}), {2.0});
    EXPECT_NEAR(r, 1.0 + std::exp(1.0), 1e-12);
}

TEST(RunClustering, OneIterationRecordsOneObjective) {
    std::mt19937_64 rng(2);
    const auto ps = oracle::random_point_set(rng, 60, 2);
    const auto res = run_clustering(ps, 3, {16.0}, {1, 1e-6}, 5);
    EXPECT_EQ(res.iterations_run, 1u);
    EXPECT_EQ(res.objective_trace.size(), 1u);
}

TEST(RunClustering, UniformGridWithoutWeightingCentresOnTheGrid) {
    auto f = AmplitudeField::zeros({21, 21});
    const auto ps = to_point_set(f);
    const auto res = run_clustering(ps, 1, {0.0}, {}, 3);
    EXPECT_NEAR(res.centroids[0][0], 10.0, 1.0);
    EXPECT_NEAR(res.centroids[0][1], 10.0, 1.0);
}

TEST(RunClustering, SingleEventPullsTheCentroidOntoIt) {
    const auto sf = generate({64, 64}, {1, 1}, {EventSpec{{20, 41}, 1.0, 4.0, Profile::gaussian}},
                             NoiseSpec{}, 0);
    const auto ps = to_point_set(sf.field);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto res = run_clustering(ps, 1, {16.0}, {}, seed);
        EXPECT_LE(distance(res.centroids[0], std::vector<double>{20, 41}), 2.0) << seed;
    }
}

TEST(RunClustering, TerminatesDeterministicallyWithValidLabels) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto ps = oracle::random_point_set(rng, 150, 2);
        const ClusteringOptions opts{25, 1e-6};
        const auto a = run_clustering(ps, 5, {16.0}, opts, trial);
        const auto b = run_clustering(ps, 5, {16.0}, opts, trial);
        EXPECT_LE(a.iterations_run, 25u);
        EXPECT_EQ(a.objective_trace.size(), a.iterations_run);
        EXPECT_EQ(a.assignment, b.assignment);
        EXPECT_EQ(a.centroids, b.centroids);
        EXPECT_EQ(a.objective_trace, b.objective_trace);
        ASSERT_EQ(a.assignment.size(), ps.size());
        for (auto v : a.assignment) EXPECT_LT(v, 5u);
    }
}

TEST(RunClustering, RejectsBadParameters) {
    PointSet ps(1, {0.0, 1.0}, {0.0, 1.0});
    EXPECT_THROW(run_clustering(ps, 1, {16.0}, {0, 1e-6}, 0), InvalidDataError);
    EXPECT_THROW(run_clustering(ps, 1, {-1.0}, {}, 0), InvalidDataError);
    EXPECT_THROW(run_clustering(ps, 3, {16.0}, {}, 0), InvalidDataError);
}
