#include <map>
#include <numbers>

#include <gtest/gtest.h>

#include "orbiflow/error.hpp"
#include "orbiflow/trigroup.hpp"

using namespace orbiflow;
using namespace orbiflow::trigroup;

namespace {

struct Counts {
    CaseId id;
    int elements, elliptic, hyperbolic, boundary_axes;
};

const Counts kCounts[] = {
    {CaseId::C237, 7, 5, 2, 2}, {CaseId::C245, 5, 3, 2, 2}, {CaseId::C246, 4, 3, 1, 0},
    {CaseId::C334, 4, 2, 2, 2}, {CaseId::C344, 3, 2, 1, 0},
};

const Arrangement& arrangement(CaseId id) {
    static std::map<CaseId, Arrangement> cache;
    auto it = cache.find(id);
    if (it == cache.end()) {
        auto G = build_group(id);
        it = cache.emplace(id, build_arrangement(G, curve_system(G, id), kAdjacencyDepth)).first;
    }
    return it->second;
}

}  // namespace

TEST(TriGroup, GeneratorsHaveTheirOrders) {
    for (CaseId id : kAllCases) {
        auto G = build_group(id);
        EXPECT_TRUE(G.gP.pow(G.p).approx_identity(1e-9));
        EXPECT_TRUE(G.gQ.pow(G.q).approx_identity(1e-9));
        EXPECT_TRUE(G.gR.pow(G.r).approx_identity(1e-9));
        EXPECT_FALSE(G.gR.pow(G.r - 1).approx_identity(1e-6));
        // one of the two cyclic orderings multiplies to the identity
        bool rel = (G.gP * G.gQ * G.gR).approx_identity(1e-9) || (G.gR * G.gQ * G.gP).approx_identity(1e-9);
        EXPECT_TRUE(rel) << case_name(id);
    }
}

TEST(TriGroup, RejectsEuclideanTriple) {
    EXPECT_THROW(build_group(2, 3, 6), Error);
    EXPECT_THROW(build_group(1, 3, 7), Error);
}

TEST(TriGroup, WordsEvaluate) {
    auto G = build_group(CaseId::C237);
    std::vector<Gen> w{Gen::P, Gen::QInv, Gen::R};
    EXPECT_EQ(word_string(w), "PqR");
    EXPECT_EQ(word_string({}), "1");
    EXPECT_LT(evaluate(G, w).distance_to(G.gP * G.gQ.inverse() * G.gR), 1e-12);
}

TEST(TriGroup, BallHasDistinctElements) {
    auto G = build_group(CaseId::C344);
    auto ball = enumerate_elements(G, 5);
    ASSERT_FALSE(ball.empty());
    EXPECT_TRUE(ball.front().word.empty());
    for (std::size_t i = 0; i < ball.size(); ++i) {
        EXPECT_LT(evaluate(G, ball[i].word).distance_to(ball[i].matrix), 1e-9);
        for (std::size_t j = i + 1; j < ball.size(); ++j) ASSERT_GT(ball[i].matrix.distance_to(ball[j].matrix), 1e-7);
    }
    EXPECT_GT(enumerate_elements(G, 6).size(), ball.size());
}

TEST(TriGroup, CurveSystemIsInvariant) {
    for (CaseId id : kAllCases) {
        const auto& A = arrangement(id);
        auto G = A.group;
        int checked = 0;
        for (const auto& l : A.lines) {
            if (hyp2::distance_to_geodesic(A.curves.center, l) > A.line_saturation / 2) continue;
            for (const auto& g : {G.gP, G.gQ, G.gR}) {
                EXPECT_TRUE(A.on_lift(hyp2::apply(g, l))) << case_name(id);
                ++checked;
            }
        }
        EXPECT_GT(checked, 0) << case_name(id);
    }
}

TEST(TriGroup, CellCentersAreOrbitPoints) {
    for (CaseId id : kAllCases) {
        const auto& A = arrangement(id);
        for (const auto& c : cell_tiling(A))
            EXPECT_TRUE(hyp2::approx_equal(hyp2::apply(c.witness.matrix, A.curves.center), c.center, 1e-7));
    }
}

TEST(TriGroup, BaseCellIsSymmetricUnderStabilizer) {
    for (CaseId id : kAllCases) {
        const auto& A = arrangement(id);
        auto poly = cell_polygon(A, A.curves.center);
        ASSERT_FALSE(poly.empty()) << case_name(id);
        EXPECT_EQ(static_cast<int>(poly.size()) % A.curves.k, 0) << case_name(id);
        auto rot = hyp2::rotation_about(A.curves.center, 2 * std::numbers::pi / A.curves.k);
        for (HPoint v : poly) {
            HPoint w = hyp2::apply(rot, v);
            bool found = false;
            for (HPoint u : poly) found = found || hyp2::approx_equal(u, w, 1e-7);
            EXPECT_TRUE(found) << case_name(id);
        }
    }
}

TEST(TriGroup, AdjacencyCounts) {
    for (const auto& c : kCounts) {
        auto rep = adjacency_isometries(arrangement(c.id));
        EXPECT_EQ(static_cast<int>(rep.elements.size()), c.elements) << case_name(c.id);
        EXPECT_EQ(rep.elliptic, c.elliptic) << case_name(c.id);
        EXPECT_EQ(rep.hyperbolic, c.hyperbolic) << case_name(c.id);
        EXPECT_EQ(rep.parabolic, 0) << case_name(c.id);
        EXPECT_EQ(rep.boundary_axes, c.boundary_axes) << case_name(c.id);
        EXPECT_EQ(rep.stabilizer_order, arrangement(c.id).curves.k);
        // each element carries the base cell onto the neighbour
        for (const auto& e : rep.elements)
            EXPECT_TRUE(hyp2::approx_equal(hyp2::apply(e.element.matrix, rep.base_center), rep.neighbor_center, 1e-7));
    }
}

TEST(TriGroup, ShallowDepthIsReported) {
    auto G = build_group(CaseId::C237);
    auto A = build_arrangement(G, curve_system(G, CaseId::C237), 4);
    try {
        adjacency_isometries(A);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DepthInsufficient);
    }
}

TEST(TriGroup, CrossingCountsOfHyperbolicElements) {
    const std::map<CaseId, std::vector<int>> expected{
        {CaseId::C246, {1}}, {CaseId::C334, {2, 2}}, {CaseId::C344, {1}}};
    for (const auto& [id, counts] : expected) {
        const auto& A = arrangement(id);
        auto rep = adjacency_isometries(A);
        std::vector<int> got;
        for (const auto& e : rep.elements)
            if (e.cls.kind == hyp2::Kind::Hyperbolic) got.push_back(crossing_count(A, e.element.matrix));
        EXPECT_EQ(got, counts) << case_name(id);
    }
}

TEST(TriGroup, CrossingCountIsAConjugacyInvariant) {
    for (CaseId id : {CaseId::C246, CaseId::C334, CaseId::C344}) {
        const auto& A = arrangement(id);
        auto rep = adjacency_isometries(A);
        for (const auto& e : rep.elements) {
            if (e.cls.kind != hyp2::Kind::Hyperbolic) continue;
            int n = crossing_count(A, e.element.matrix);
            // conjugating by the stabilizer of the base centre keeps the axis near it
            auto s = hyp2::rotation_about(A.curves.center, 2 * std::numbers::pi / A.curves.k);
            EXPECT_EQ(crossing_count(A, s * e.element.matrix * s.inverse()), n) << case_name(id);
            EXPECT_EQ(crossing_count(A, e.element.matrix.inverse()), n) << case_name(id);
        }
    }
}

TEST(TriGroup, CrossingCountDoublesOnSquares) {
    for (CaseId id : {CaseId::C246, CaseId::C344}) {
        const auto& A = arrangement(id);
        for (const auto& e : adjacency_isometries(A).elements) {
            if (e.cls.kind != hyp2::Kind::Hyperbolic) continue;
            EXPECT_EQ(crossing_count(A, e.element.matrix.pow(2)), 2 * crossing_count(A, e.element.matrix));
        }
    }
}

TEST(TriGroup, CrossingCountRejectsElliptic) {
    const auto& A = arrangement(CaseId::C237);
    EXPECT_THROW(crossing_count(A, A.group.gR), Error);
}

TEST(TriGroup, SecondNeighbourGivesTheSameCounts) {
    int sampled = 0;
    for (const auto& c : kCounts) {
        const auto& A = arrangement(c.id);
        if (touching_neighbor_count(A) < 2) continue;
        auto first = adjacency_isometries(A, 0), second = adjacency_isometries(A, 1);
        EXPECT_FALSE(hyp2::approx_equal(first.neighbor_center, second.neighbor_center, 1e-7));
        EXPECT_EQ(second.elements.size(), first.elements.size()) << case_name(c.id);
        EXPECT_EQ(second.elliptic, first.elliptic) << case_name(c.id);
        EXPECT_EQ(second.hyperbolic, first.hyperbolic) << case_name(c.id);
        EXPECT_EQ(second.boundary_axes, first.boundary_axes) << case_name(c.id);
        ++sampled;
    }
    EXPECT_GT(sampled, 0);
}
