#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "orbiflow/error.hpp"
#include "orbiflow/trigroup.hpp"

namespace orbiflow::cli {

namespace {

using cplx = std::complex<double>;
using hyp2::HPoint;

constexpr double kPi = std::numbers::pi;
constexpr double kReach = 3.0;
constexpr double kDrawRadius = 4.5;

// half-plane -> disc with the base centre at the origin; y grows upward
struct View {
    HPoint c;

    cplx point(HPoint p) const { return hyp2::to_disc({(p.x - c.x) / c.y, p.y / c.y}); }
    cplx ideal(hyp2::Ideal u) const {
        if (u.inf) return {1.0, 0.0};
        const cplx i(0.0, 1.0);
        cplx w((u.x - c.x) / c.y, 0.0);
        return (w - i) / (w + i);
    }
};

std::string coords(cplx z) { return fmt::format("{:.5f},{:.5f}", z.real(), -z.imag()); }

void subdivide(HPoint p, HPoint q, int level, std::vector<HPoint>& out) {
    if (level == 0 || hyp2::distance(p, q) < 1e-3) {
        out.push_back(q);
        return;
    }
    HPoint m = hyp2::midpoint(p, q);
    subdivide(p, m, level - 1, out);
    subdivide(m, q, level - 1, out);
}

std::string polygon_path(const View& v, const std::vector<HPoint>& verts) {
    std::vector<HPoint> pts{verts.front()};
    for (std::size_t i = 0; i < verts.size(); ++i) subdivide(verts[i], verts[(i + 1) % verts.size()], 4, pts);
    std::string d = "M" + coords(v.point(pts.front()));
    for (std::size_t i = 1; i < pts.size(); ++i) d += " L" + coords(v.point(pts[i]));
    return d + " Z";
}

// arc of the circle orthogonal to the unit circle through the two ends
std::string line_path(const View& v, const hyp2::Geodesic& g) {
    cplx a = v.ideal(g.u), b = v.ideal(g.v);
    double delta = std::abs(std::arg(b / a));
    if (std::abs(delta - kPi) < 1e-9) return "M" + coords(a) + " L" + coords(b);
    cplx mid = (a + b) / std::abs(a + b);
    cplx center = mid / std::cos(delta / 2);
    double r = std::tan(delta / 2);
    double t0 = std::arg(a - center), t1 = std::arg(b - center);
    double sweep = std::remainder(t1 - t0, 2 * kPi);
    std::string d = "M" + coords(a);
    const int n = 48;
    for (int k = 1; k <= n; ++k) d += " L" + coords(center + std::polar(r, t0 + sweep * k / n));
    return d;
}

std::vector<HPoint> translate(const hyp2::Isometry& g, const std::vector<HPoint>& poly) {
    std::vector<HPoint> out;
    for (HPoint p : poly) out.push_back(hyp2::apply(g, p));
    return out;
}

const char* fill_for(char vertex, char center_vertex) {
    if (vertex == center_vertex) return "#f3e3c3";
    switch (vertex) {
        case 'P': return "#cfe3f5";
        case 'Q': return "#d8efd2";
        default: return "#ead5ef";
    }
}

}  // namespace

std::string render_tiling_svg(CaseId id, int depth, const hyp2::Tolerances& tol, SvgStats* stats) {
    SvgStats st;
    auto G = trigroup::build_group(id);
    auto C = trigroup::curve_system(G, id);
    auto A = trigroup::build_arrangement(G, C, depth, tol);
    const View view{C.center};

    std::string cells, lines, highlight, axes;
    // every cell is a translate of the cell around one of the triangle's vertices
    const auto& tri = G.tri;
    std::vector<HPoint> base;
    for (auto [vertex, pt] : {std::pair{'P', tri.P}, std::pair{'Q', tri.Q}, std::pair{'R', tri.R}}) {
        if (!A.lines_near(pt, 1e-7).empty()) continue;
        auto proto = trigroup::cell_polygon(A, pt, kReach);
        if (proto.empty()) continue;
        if (vertex == C.center_vertex) base = proto;
        for (const auto& cell : trigroup::orbit_cells(A, pt, kDrawRadius)) {
            cells += fmt::format("  <path class=\"cell-{}\" fill=\"{}\" d=\"{}\"/>\n", vertex,
                                 fill_for(vertex, C.center_vertex),
                                 polygon_path(view, translate(cell.witness.matrix, proto)));
            ++st.cells;
        }
    }

    for (const auto& l : A.lines) {
        if (hyp2::distance_to_geodesic(C.center, l) > kDrawRadius) continue;
        lines += fmt::format("  <path d=\"{}\"/>\n", line_path(view, l));
        ++st.lines;
    }

    if (!base.empty()) {
        highlight += fmt::format("  <path class=\"base\" d=\"{}\"/>\n", polygon_path(view, base));
        ++st.highlighted;
    }
    std::optional<trigroup::AdjacencyReport> adj;
    try {
        adj = trigroup::adjacency_isometries(A);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DepthInsufficient && e.kind() != ErrorKind::NeighborNotFound) throw;
    }
    if (adj) {
        if (!base.empty()) {
            highlight += fmt::format("  <path class=\"neighbor\" d=\"{}\"/>\n",
                                     polygon_path(view, translate(adj->neighbor_witness.matrix, base)));
            ++st.highlighted;
        }
        for (const auto& e : adj->elements) {
            if (e.cls.kind != hyp2::Kind::Hyperbolic) continue;
            axes += fmt::format("  <path class=\"{}\" d=\"{}\"/>\n", e.on_boundary ? "axis-boundary" : "axis",
                                line_path(view, *e.cls.axis));
            ++st.axes;
        }
    }

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
           "viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    svg += fmt::format("<title>case {} arrangement, depth {}</title>\n", case_name(id), depth);
    svg += "<style>\n"
           "  .cells path {stroke: none}\n"
           "  .lines path {fill: none; stroke: #333; stroke-width: 0.003}\n"
           "  .base {fill: #e8a33d; fill-opacity: 0.75; stroke: #7a4a00; stroke-width: 0.006}\n"
           "  .neighbor {fill: #5b9bd5; fill-opacity: 0.6; stroke: #1f4e79; stroke-width: 0.006}\n"
           "  .axes path {fill: none; stroke-width: 0.006; stroke-dasharray: 0.02 0.012}\n"
           "  .axis {stroke: #c00000}\n"
           "  .axis-boundary {stroke: #2e7d32}\n"
           "</style>\n";
    svg += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"#fafafa\" stroke=\"#000\" stroke-width=\"0.004\"/>\n";
    svg += "<g class=\"cells\">\n" + cells + "</g>\n";
    svg += "<g class=\"highlight\">\n" + highlight + "</g>\n";
    svg += "<g class=\"lines\">\n" + lines + "</g>\n";
    svg += "<g class=\"axes\">\n" + axes + "</g>\n";
    svg += "</svg>\n";
    if (stats) *stats = st;
    return svg;
}

}  // namespace orbiflow::cli
