#include <gtest/gtest.h>

#include "orbiflow/snf.hpp"

using namespace orbiflow;

TEST(Snf, HandComputedTwoByTwo) {
    // gcd of entries 2, determinant -8
    auto S = smith_normal_form({{2, 4}, {6, 8}});
    EXPECT_EQ(S.diagonal, (std::vector<long long>{2, 4}));
    EXPECT_EQ(multiply(multiply(S.U, IntMatrix{{2, 4}, {6, 8}}), S.V), S.D);
}

TEST(Snf, CokernelOfCoprimeDiagonal) {
    EXPECT_EQ(cokernel({{2, 0}, {0, 3}}), make_group({1, 6}));
    EXPECT_EQ(cokernel({{2, 0}, {0, 3}}).factors, (std::vector<long long>{6}));
    EXPECT_EQ(*cokernel({{4, 0}, {0, 6}}).order(), 24);
    EXPECT_EQ(cokernel({{4, 0}, {0, 6}}).factors, (std::vector<long long>{2, 12}));
}

TEST(Snf, FreePartFromZeroRowsAndMissingColumns) {
    auto G = cokernel({{0, 0}, {0, 5}, {0, 0}});
    EXPECT_EQ(G.rank(), 2);
    EXPECT_EQ(G.torsion(), (std::vector<long long>{5}));
    EXPECT_FALSE(G.order().has_value());
    EXPECT_EQ(make_group({}, 1).str(), "Z");
    EXPECT_EQ(make_group({1}).str(), "0");
}

TEST(Snf, SeifertDeterminantByCofactors) {
    // rows [p,0,0,1],[0,q,0,1],[0,0,r,1],[1,1,1,1]; expanding gives pqr - pq - pr - qr
    for (auto [p, q, r] : {std::array{2, 3, 7}, std::array{2, 4, 5}, std::array{2, 4, 6}, std::array{3, 3, 4},
                           std::array{3, 4, 4}}) {
        IntMatrix M{{p, 0, 0, 1}, {0, q, 0, 1}, {0, 0, r, 1}, {1, 1, 1, 1}};
        EXPECT_EQ(determinant(M), p * q * r - p * q - p * r - q * r);
    }
}

TEST(Snf, DeterminantAgreesWithInvariantFactors) {
    IntMatrix M{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
    auto S = smith_normal_form(M);
    long long prod = 1;
    for (long long d : S.diagonal) prod *= d;
    EXPECT_EQ(prod, std::llabs(determinant(M)));
}

TEST(Snf, RectangularMatrix) {
    IntMatrix M{{2, 4, 4}, {-6, 6, 12}};
    auto S = smith_normal_form(M);
    EXPECT_EQ(S.diagonal, (std::vector<long long>{2, 6}));
    EXPECT_EQ(multiply(multiply(S.U, M), S.V), S.D);
}
