#include "ics/errors.hpp"
#include "ics/field.hpp"
#include "ics/synth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace ics;

TEST(ToPointSet, TwoByTwoNormalizesAndLaysOutRowMajor) {
    AmplitudeField f{{2, 2}, {1.0, 1.0}, {0, 1, 2, 3}};
    const auto ps = to_point_set(f);
    ASSERT_EQ(ps.size(), 4u);
    const std::vector<double> amps{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    const std::vector<std::vector<double>> coords{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_DOUBLE_EQ(ps.amp(i), amps[i]);
        EXPECT_EQ(std::vector<double>(ps.coord(i).begin(), ps.coord(i).end()), coords[i]);
    }
    EXPECT_EQ(ps.norm_min(), 0.0);
    EXPECT_EQ(ps.norm_max(), 3.0);
}

TEST(ToPointSet, ConstantFieldGivesZeroAmplitudes) {
    AmplitudeField f{{3, 4}, {1.0, 1.0}, std::vector<double>(12, 5.0)};
    const auto ps = to_point_set(f);
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(ps.amp(i), 0.0);
}

TEST(ToPointSet, EmptyFieldIsAnError) {
    AmplitudeField f{{0}, {1.0}, {}};
    try {
        to_point_set(f);
        FAIL() << "expected an error";
    } catch (const InvalidDataError& e) {
        EXPECT_NE(std::string(e.what()).find("empty field"), std::string::npos);
    }
}

TEST(ToPointSet, SpacingScalesCoordinates) {
    AmplitudeField f{{2, 3}, {0.5, 2.0}, {0, 1, 2, 3, 4, 5}};
    const auto ps = to_point_set(f);
    EXPECT_DOUBLE_EQ(ps.coord(5)[0], 0.5);
    EXPECT_DOUBLE_EQ(ps.coord(5)[1], 4.0);
}

TEST(ToPointSet, SingleGaussianArgmaxMatchesSource) {
    EventSpec ev{{37, 61}, 1.0, 6.0, Profile::gaussian};
    const auto sf = generate({100, 100}, {1, 1}, {ev}, NoiseSpec{}, 1);
    const auto ps = to_point_set(sf.field);

    std::size_t scan = 0;
    for (std::size_t i = 1; i < sf.field.values.size(); ++i) {
        if (sf.field.values[i] > sf.field.values[scan]) scan = i;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < ps.size(); ++i) {
        if (ps.amp(i) > ps.amp(best)) best = i;
    }
    EXPECT_EQ(best, scan);
    EXPECT_EQ(ps.coord(best)[0], 37.0);
    EXPECT_EQ(ps.coord(best)[1], 61.0);
}

TEST(ToPointSet, NonConstantFieldSpansZeroToOneExactly) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd(3.0, 7.0);
    for (int trial = 0; trial < 25; ++trial) {
        AmplitudeField f{{7, 9}, {1, 1}, std::vector<double>(63)};
        for (auto& v : f.values) v = nd(rng);
        const auto ps = to_point_set(f);
        const auto [lo, hi] = std::minmax_element(ps.amps().begin(), ps.amps().end());
        EXPECT_EQ(*lo, 0.0);
        EXPECT_EQ(*hi, 1.0);
    }
}

TEST(AmplitudeField, ValidateRejectsInconsistentShapes) {
    EXPECT_THROW((AmplitudeField{{2, 2}, {1, 1}, {1, 2, 3}}).validate(), InvalidDataError);
    EXPECT_THROW((AmplitudeField{{2, 2}, {1}, {1, 2, 3, 4}}).validate(), InvalidDataError);
    EXPECT_THROW((AmplitudeField{{2, 2}, {1, 0}, {1, 2, 3, 4}}).validate(), InvalidDataError);
    EXPECT_THROW((AmplitudeField{{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {0}}).validate(),
                 InvalidDataError);
    EXPECT_NO_THROW((AmplitudeField{{2, 2}, {1, 1}, {1, 2, 3, 4}}).validate());
}

TEST(AmplitudeField, RavelInvertsUnravel) {
    auto f = AmplitudeField::zeros({3, 4, 5});
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f.ravel(f.unravel(i)), i);
    EXPECT_EQ(f.unravel(23), (std::vector<std::size_t>{1, 0, 3}));
}

TEST(PointSet, RejectsAmplitudesOutsideUnitInterval) {
    EXPECT_THROW(PointSet(1, {0.0}, {1.5}), InvalidDataError);
    EXPECT_THROW(PointSet(1, {0.0}, {-0.1}), InvalidDataError);
    EXPECT_THROW(PointSet(2, {0.0}, {0.5}), InvalidDataError);
}

TEST(DeletePoints, EmptySetIsIdentity) {
    std::mt19937_64 rng(3);
    std::vector<double> c(40), a(20);
    for (auto& v : c) v = std::uniform_real_distribution<double>(0, 5)(rng);
    for (auto& v : a) v = std::uniform_real_distribution<double>(0, 1)(rng);
    PointSet ps(2, c, a, -1.0, 4.0);
    EXPECT_EQ(delete_points(ps, {}), ps);
}

TEST(DeletePoints, DeletingEverythingLeavesEmptySet) {
    PointSet ps(1, {0, 1, 2}, {0.1, 0.2, 0.3});
    const std::vector<std::size_t> all{0, 1, 2};
    const auto out = delete_points(ps, all);
    EXPECT_TRUE(out.empty());
    EXPECT_EQ(out.ndim(), 1u);
}

TEST(DeletePoints, HalfOfThousandKeepsSurvivorsBitIdentical) {
    std::mt19937_64 rng(5);
    const std::size_t n = 1000;
    std::vector<double> c(n), a(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = static_cast<double>(i);
        a[i] = std::uniform_real_distribution<double>(0, 1)(rng);
    }
    PointSet ps(1, c, a, 2.0, 9.0);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(n / 2);

    const auto out = delete_points(ps, idx);
    ASSERT_EQ(out.size(), n / 2);
    const std::set<std::size_t> gone(idx.begin(), idx.end());
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < n; ++i) {
        if (!gone.count(i)) expected.push_back(i);
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(out.coord(k)[0], c[expected[k]]);
        EXPECT_EQ(out.amp(k), a[expected[k]]);
    }
    EXPECT_EQ(out.norm_min(), 2.0);
    EXPECT_EQ(out.norm_max(), 9.0);
}

TEST(DeletePoints, DuplicatesCountOnceAndOutOfRangeThrows) {
    PointSet ps(1, {0, 1, 2, 3}, {0.1, 0.2, 0.3, 0.4});
    const std::vector<std::size_t> dup{1, 1, 3};
    EXPECT_EQ(delete_points(ps, dup).size(), 2u);
    const std::vector<std::size_t> bad{4};
    EXPECT_THROW(delete_points(ps, bad), InvalidDataError);
}

TEST(Distance, EuclideanInAnyDimension) {
    const std::vector<double> a{0, 0, 0}, b{1, 2, 2};
    EXPECT_DOUBLE_EQ(squared_distance(a, b), 9.0);
    EXPECT_DOUBLE_EQ(distance(a, b), 3.0);
}
