#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "orbiflow/error.hpp"
#include "orbiflow/torusmap.hpp"

using namespace orbiflow;
using namespace orbiflow::torusmap;

namespace {

// all points of denominator N fixed by A
std::set<RationalPoint> brute_force_fixed(const TorusMatrix& A, long long N) {
    std::set<RationalPoint> out;
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j) {
            auto p = RationalPoint::make(i, j, N);
            if (act(A, p) == p) out.insert(p);
        }
    return out;
}

}  // namespace

TEST(TorusMap, MatrixBasics) {
    EXPECT_EQ(cat(), TorusMatrix::make(2, 1, 1, 1));
    EXPECT_EQ(cat() * cat().inverse(), TorusMatrix{});
    EXPECT_EQ(cat().pow(2), TorusMatrix::make(5, 3, 3, 2));
    EXPECT_EQ(det_minus_identity(cat()), -1);
    EXPECT_THROW(TorusMatrix::make(2, 1, 1, 2), Error);
}

TEST(TorusMap, FixedPointsMatchBruteForce) {
    for (int n = 1; n <= 4; ++n) {
        auto An = cat().pow(n);
        long long count = std::llabs(det_minus_identity(An));
        auto fixed = fixed_points(An);
        EXPECT_EQ(static_cast<long long>(fixed.size()), count) << n;
        // fixed points have denominator dividing |det(A^n - I)|
        auto brute = brute_force_fixed(An, count);
        EXPECT_EQ(std::set<RationalPoint>(fixed.begin(), fixed.end()), brute) << n;
        EXPECT_EQ(periodic_point_count(cat(), n), count);
    }
    // Lucas numbers L_2n - 2
    EXPECT_EQ(periodic_point_count(cat(), 1), 1);
    EXPECT_EQ(periodic_point_count(cat(), 2), 5);
    EXPECT_EQ(periodic_point_count(cat(), 3), 16);
    EXPECT_EQ(periodic_point_count(cat(), 4), 45);
}

TEST(TorusMap, PeriodTwoOrbits) {
    auto a = RationalPoint::make(3, 1, 5), b = RationalPoint::make(1, 2, 5);
    auto oa = orbit_of(cat(), a), ob = orbit_of(cat(), b);
    EXPECT_EQ(oa.period(), 2);
    EXPECT_EQ(ob.period(), 2);
    EXPECT_FALSE(oa.contains(b));
    EXPECT_EQ(act(cat(), a), RationalPoint::make(2, 4, 5));
    auto orbits = periodic_orbits(cat(), 2);
    EXPECT_EQ(orbits.size(), 3u);  // the fixed point and two 2-cycles
}

TEST(TorusMap, RationalPointReduction) {
    EXPECT_EQ(RationalPoint::make(6, -2, 10), RationalPoint::make(3, 4, 5));
    EXPECT_EQ(RationalPoint::make(5, 10, 5), RationalPoint::make(0, 0, 1));
}

TEST(TorusMap, CatIsXY) {
    EXPECT_EQ(X() * Y(), cat());
    EXPECT_EQ(xy_normal_form(cat()), word_from_letters("XY"));
    EXPECT_EQ(xy_normal_form(cat().pow(2)), word_from_letters("XYXY"));
    EXPECT_TRUE(conjugate_in_sl2z(cat(), Y() * X()));
    EXPECT_FALSE(conjugate_in_sl2z(cat(), cat().pow(2)));
}

TEST(TorusMap, CanonicalWordIsRotationInvariant) {
    EXPECT_EQ(canonical_word({1, 2, 3, 1}), canonical_word({3, 1, 1, 2}));
    EXPECT_EQ(word_from_letters("XXYXY"), word_from_letters("XYXXY"));
    EXPECT_EQ(word_from_letters("XXYXY"), canonical_word({2, 1, 1, 1}));
}

TEST(TorusMap, TraceThreeUniqueness) {
    auto scan = trace3_scan(8);
    EXPECT_TRUE(scan.unique);
    EXPECT_TRUE(scan.monotone);
    EXPECT_GT(scan.trace3, 0);
    EXPECT_EQ(scan.words, (1LL << 9) - 4);  // lengths 2..8
    EXPECT_TRUE(trace3_uniqueness(8));
}
