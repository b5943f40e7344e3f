#include <gtest/gtest.h>

#include "render.hpp"

using namespace orbiflow;

TEST(Render, DeterministicOutput) {
    cli::SvgStats a, b;
    std::string s1 = cli::render_tiling_svg(CaseId::C334, 6, {}, &a);
    std::string s2 = cli::render_tiling_svg(CaseId::C334, 6, {}, &b);
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(a.cells, b.cells);
}

TEST(Render, ShallowDepthStillShowsBaseCell) {
    cli::SvgStats st;
    std::string svg = cli::render_tiling_svg(CaseId::C237, 4, {}, &st);
    EXPECT_GE(st.highlighted, 1);
    EXPECT_NE(svg.find("class=\"base\""), std::string::npos);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, FullDepthHighlightsNeighbourAndAxes) {
    for (CaseId id : kAllCases) {
        cli::SvgStats st;
        cli::render_tiling_svg(id, 8, {}, &st);
        EXPECT_EQ(st.highlighted, 2) << case_name(id);
        EXPECT_GT(st.cells, 0) << case_name(id);
        EXPECT_GE(st.axes, 1) << case_name(id);
    }
}
