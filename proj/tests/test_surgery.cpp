#include <gtest/gtest.h>

#include "orbiflow/error.hpp"
#include "orbiflow/surgery.hpp"

using namespace orbiflow;
using namespace orbiflow::surgery;

TEST(Surgery, SlopeNormalization) {
    EXPECT_EQ(SlopeCoefficient::make(1, -2), SlopeCoefficient::make(-1, 2));
    EXPECT_EQ(SlopeCoefficient::make(-1, 0), SlopeCoefficient::make(1, 0));
    EXPECT_EQ(SlopeCoefficient::make(1, 1).str(), "1");
    EXPECT_EQ(SlopeCoefficient::make(1, 2).str(), "1/2");
    EXPECT_EQ(SlopeCoefficient::make(-1, 3).str(), "-1/3");
    EXPECT_THROW(SlopeCoefficient::make(2, 4), Error);
}

TEST(Surgery, SectionToSlope) {
    EXPECT_EQ(section_to_slope(1, 1), SlopeCoefficient::make(1, 1));
    EXPECT_EQ(section_to_slope(3, 1), SlopeCoefficient::make(1, 3));
    EXPECT_THROW(section_to_slope(1, 0), Error);
}

TEST(Surgery, SeifertOrders) {
    // |H1| = |pqr * e| with e = -(b0 + 1/p + 1/q + 1/r), b0 = -1
    EXPECT_EQ(seifert_h1(2, 3, 7), make_group({}));
    EXPECT_EQ(seifert_h1(2, 4, 5), make_group({2}));
    EXPECT_EQ(seifert_h1(3, 3, 4), make_group({3}));
    EXPECT_EQ(seifert_h1(2, 4, 6), make_group({2, 2}));
    EXPECT_EQ(seifert_h1(3, 4, 4), make_group({8}));
    EXPECT_EQ(seifert_data(2, 3, 7).euler_number(), Rational(1, 42));
    EXPECT_EQ(seifert_data(2, 3, 7, SeifertConvention::Reversed).euler_number(), Rational(-1, 42));
    for (auto [p, q, r] : {std::array{2, 3, 7}, std::array{3, 4, 4}})
        EXPECT_EQ(seifert_h1(p, q, r), seifert_h1(p, q, r, SeifertConvention::Reversed));
}

TEST(Surgery, MappingTorus) {
    EXPECT_EQ(mapping_torus_h1(torusmap::cat()), make_group({}, 1));
    // A^2 - I has determinant -5
    EXPECT_EQ(mapping_torus_h1(torusmap::cat().pow(2)), make_group({5}, 1));
}

TEST(Surgery, ZeroCoefficientReturnsMappingTorus) {
    auto P = surgery_presentation({gamma1(), SlopeCoefficient::make(1, 0)});
    EXPECT_TRUE(P.zero_surgery);
    EXPECT_EQ(surgered_h1({gamma1(), SlopeCoefficient::make(1, 0)}), mapping_torus_h1(torusmap::cat()));
    EXPECT_EQ(surgered_h1({gamma2(), SlopeCoefficient::make(1, 0)}), mapping_torus_h1(torusmap::cat()));
}

TEST(Surgery, PresentationShape) {
    auto P1 = surgery_presentation({gamma1(), SlopeCoefficient::make(1, 1)});
    auto P2 = surgery_presentation({gamma2(), SlopeCoefficient::make(1, 1)});
    EXPECT_EQ(P1.longitude.size(), 3u);  // x, y, t
    EXPECT_EQ(P2.longitude.size(), 4u);  // x, y, m_1, t
    EXPECT_EQ(P2.meridian, (std::vector<long long>{0, 0, 1, 0}));
}

TEST(Surgery, PushOffChoiceDoesNotMatter) {
    for (const auto& orbit : {gamma1(), gamma2()})
        for (long long a = 1; a <= 6; ++a)
            for (long long b : {1LL, -1LL}) {
                SurgerySpec s{orbit, SlopeCoefficient::make(b, a)};
                EXPECT_EQ(surgered_h1(s, torusmap::cat(), 3), surgered_h1(s, torusmap::cat(), 4));
            }
}

TEST(Surgery, Gamma1OrderEqualsDenominator) {
    for (long long a = 1; a <= 10; ++a) {
        auto pos = surgered_h1({gamma1(), SlopeCoefficient::make(1, a)});
        auto neg = surgered_h1({gamma1(), SlopeCoefficient::make(-1, a)});
        ASSERT_TRUE(pos.order().has_value());
        EXPECT_EQ(*pos.order(), a);
        EXPECT_EQ(pos, neg);
    }
}

TEST(Surgery, TheoremRowsMatchSeifert) {
    auto rows = verify_theorem_h1();
    ASSERT_EQ(rows.size(), 5u);
    const long long orders[] = {1, 2, 3, 4, 8};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_TRUE(rows[i].match) << rows[i].orbit << " " << rows[i].slope.str();
        EXPECT_EQ(rows[i].surgered, rows[i].seifert);
        EXPECT_EQ(rows[i].surgered_negated, rows[i].seifert);
        EXPECT_EQ(*rows[i].surgered.order(), orders[i]);
    }
}

TEST(Surgery, ExceptionalTable) {
    auto table = exceptional_slope_table();
    EXPECT_EQ(table.size(), 7u);
    int targets = 0;
    for (const auto& row : table) targets += row.target.has_value();
    EXPECT_EQ(targets, 5);
}
