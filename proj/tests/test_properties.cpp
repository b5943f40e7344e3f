#include <gtest/gtest.h>

#include "generators.hpp"

using namespace orbiflow;
using namespace orbiflow::testing;

TEST(Properties, Hyp2ActionIsAHomomorphismAndPreservesDistance) {
    auto r = hyp2_action_property(1000, 1e-7);
    EXPECT_EQ(r.samples, 1000);
    EXPECT_EQ(r.failures, 0);
}

TEST(Properties, SmithCertificatesOnRandomMatrices) {
    auto r = snf_property(1000);
    EXPECT_EQ(r.failures, 0);
}

TEST(Properties, SmithOfRectangularAndSingular) {
    Gen gen(3);
    for (int i = 0; i < 200; ++i) {
        IntMatrix M = gen.int_matrix(static_cast<std::size_t>(gen.integer(1, 5)),
                                     static_cast<std::size_t>(gen.integer(1, 5)), 6);
        if (i % 3 == 0) M[0].assign(M[0].size(), 0);
        EXPECT_TRUE(valid_smith_certificate(M, smith_normal_form(M)));
    }
}

TEST(Properties, XYNormalFormIsAConjugacyInvariant) {
    auto r = xy_conjugation_property(100);
    EXPECT_EQ(r.samples, 100);
    EXPECT_EQ(r.failures, 0);
}

TEST(Properties, InverseIsAnInverse) {
    Gen gen(5);
    for (int i = 0; i < 500; ++i) {
        auto g = gen.isometry();
        EXPECT_TRUE((g * g.inverse()).approx_identity(1e-9));
    }
}

TEST(Properties, CatMapActionHasIntegralOrbits) {
    Gen gen(13);
    for (int i = 0; i < 200; ++i) {
        long long den = gen.integer(1, 30);
        auto p = torusmap::RationalPoint::make(gen.integer(0, den - 1), gen.integer(0, den - 1), den);
        auto o = torusmap::orbit_of(torusmap::cat(), p);
        EXPECT_TRUE(o.contains(p));
        auto q = p;
        for (int k = 0; k < o.period(); ++k) q = torusmap::act(torusmap::cat(), q);
        EXPECT_EQ(q, p);
    }
}
