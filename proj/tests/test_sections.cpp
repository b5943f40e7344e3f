#include <numeric>

#include <gtest/gtest.h>

#include "orbiflow/error.hpp"
#include "orbiflow/sections.hpp"
#include "orbiflow/surgery.hpp"

using namespace orbiflow;
using namespace orbiflow::sections;

namespace {

struct Boundary {
    CaseId id;
    int chi;
    std::vector<std::pair<long long, long long>> directions;
    Direction total;
};

const Boundary kBoundary[] = {
    {CaseId::C237, -1, {{1, 1}}, {1, 1}},
    {CaseId::C245, -1, {{2, 1}}, {2, 1}},
    {CaseId::C246, -2, {{1, 1}, {1, 1}}, {2, 2}},
    {CaseId::C334, -1, {{3, 1}}, {3, 1}},
    {CaseId::C344, -2, {{2, 1}, {2, 1}}, {4, 2}},
};

}  // namespace

TEST(Sections, ComplexesValidate) {
    for (CaseId id : kAllCases) EXPECT_NO_THROW(validate(section(id))) << case_name(id);
}

TEST(Sections, EulerCharacteristic) {
    for (const auto& b : kBoundary) {
        auto S = section(b.id);
        EXPECT_EQ(euler_characteristic(S), b.chi) << case_name(b.id);
        EXPECT_EQ(vertex_count(S) - edge_count(S) + static_cast<int>(S.polygons.size()), b.chi);
        EXPECT_TRUE(orientable(S)) << case_name(b.id);
    }
}

TEST(Sections, BoundaryDirections) {
    for (const auto& b : kBoundary) {
        auto comps = boundary_components(section(b.id));
        std::vector<std::pair<long long, long long>> dirs;
        for (const auto& c : comps) dirs.emplace_back(c.a * c.multiplicity, c.b * c.multiplicity);
        EXPECT_EQ(dirs, b.directions) << case_name(b.id);
        EXPECT_EQ(total_direction(comps), b.total) << case_name(b.id);
    }
}

TEST(Sections, GenusOneAfterCapping) {
    // chi = 2 - 2g - (boundary count) with g = 1
    for (const auto& b : kBoundary) {
        auto S = section(b.id);
        EXPECT_EQ(blow_down_genus(S), 1) << case_name(b.id);
        EXPECT_EQ(b.chi, 2 - 2 - static_cast<int>(b.directions.size()));
    }
}

TEST(Sections, TurningNumbers) {
    EXPECT_FALSE(meridional_turning(section(CaseId::C237)).applicable);
    auto t334 = meridional_turning(section(CaseId::C334));
    auto t344 = meridional_turning(section(CaseId::C344));
    ASSERT_TRUE(t334.applicable);
    ASSERT_TRUE(t344.applicable);
    EXPECT_EQ(t334.value, Rational(-1));
    EXPECT_EQ(t344.value, Rational(-2));
    auto s334 = separatrix_count(section(CaseId::C334));
    auto s344 = separatrix_count(section(CaseId::C344));
    EXPECT_EQ(std::accumulate(s334.begin(), s334.end(), 0), 2);
    EXPECT_EQ(std::accumulate(s344.begin(), s344.end(), 0), 4);
}

TEST(Sections, DirectionsGiveTheoremSlopes) {
    using surgery::SlopeCoefficient;
    const std::pair<CaseId, SlopeCoefficient> rows[] = {
        {CaseId::C237, SlopeCoefficient::make(1, 1)}, {CaseId::C245, SlopeCoefficient::make(1, 2)},
        {CaseId::C246, SlopeCoefficient::make(1, 1)}, {CaseId::C334, SlopeCoefficient::make(1, 3)},
        {CaseId::C344, SlopeCoefficient::make(1, 2)}};
    for (const auto& [id, slope] : rows) {
        auto comps = boundary_components(section(id));
        for (const auto& c : comps) EXPECT_EQ(surgery::section_to_slope(c.a, c.b), slope) << case_name(id);
    }
}

TEST(Sections, SectionHitsRespectFiberFraction) {
    auto S = section(CaseId::C237);
    EXPECT_EQ(section_hits(S, 2), 1);
    EXPECT_THROW(section_hits(S, 1), Error);
    EXPECT_EQ(section_hits(section(CaseId::C246), 1), 1);
}

TEST(Sections, ValidateCatchesBrokenGluings) {
    auto S = section(CaseId::C246);
    S.pairings.push_back(S.pairings.front());
    try {
        validate(S);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentComplex);
    }
    auto T = section(CaseId::C237);
    T.boundary.pop_back();
    EXPECT_THROW(validate(T), Error);
}

TEST(Sections, FirstReturnFromHandCounts) {
    // adjacency report with one interior hyperbolic element crossing once
    auto S = section(CaseId::C246);
    trigroup::AdjacencyReport rep;
    trigroup::AdjacentElement e;
    e.cls.kind = hyp2::Kind::Hyperbolic;
    e.on_boundary = false;
    rep.elements = {e};
    rep.hyperbolic = 1;
    auto F = first_return_summary(S, rep, {1});
    EXPECT_EQ(F.boundary_orbit_components, 2);
    EXPECT_EQ(F.boundary_fixed_points, 0);
    EXPECT_EQ(F.boundary_cycle_period, 2);
    EXPECT_EQ(F.interior_fixed_points, 1);
    EXPECT_EQ(F.total_fixed_points, 1);
}
