#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbiflow/cases.hpp"
#include "orbiflow/hyp2.hpp"

namespace orbiflow::trigroup {

using hyp2::Geodesic;
using hyp2::HPoint;
using hyp2::Isometry;
using hyp2::Tolerances;

inline constexpr int kAdjacencyDepth = 12;
inline constexpr int kTilingDepth = 8;

struct TriangleGroup {
    int p = 0, q = 0, r = 0;
    hyp2::Triangle tri;
    Isometry gP, gQ, gR;
};

TriangleGroup build_group(int p, int q, int r);
TriangleGroup build_group(CaseId id);

enum class Gen : std::uint8_t { P, PInv, Q, QInv, R, RInv };

// "P", "p" for the inverse; words are concatenations, empty word "1"
std::string word_string(const std::vector<Gen>& word);
Isometry generator(const TriangleGroup& G, Gen g);
Isometry evaluate(const TriangleGroup& G, const std::vector<Gen>& word);

struct GroupElement {
    std::vector<Gen> word;
    Isometry matrix;
};

// Shortlex BFS ball; throws DedupAmbiguity when the tolerance is too coarse.
std::vector<GroupElement> enumerate_elements(const TriangleGroup& G, int max_len, const Tolerances& tol = {});

struct CurveSystem {
    CaseId id = CaseId::C237;
    std::string curve_name;
    std::vector<Geodesic> base_lines;
    HPoint center;
    char center_vertex = 'R';
    int k = 0;  // stabilizer order of the center
    double fiber_fraction = 1.0;
};

CurveSystem curve_system(const TriangleGroup& G, CaseId id);

struct Arrangement {
    TriangleGroup group;
    CurveSystem curves;
    int depth = 0;
    Tolerances tol;
    std::vector<GroupElement> ball;
    std::vector<Geodesic> lines;
    std::vector<int> line_depth;  // shortest word producing each line
    // radii around the base center inside which no line (resp. orbit point of
    // the center) needs a word longer than depth - 2
    double line_saturation = 0.0;
    double point_saturation = 0.0;

    std::vector<const Geodesic*> lines_near(HPoint p, double radius) const;
    bool on_lift(const Geodesic& l) const;
};

// Builds the ball and the line arrangement; operations compare the radius
// they need against the saturation radii and throw DepthInsufficient.
Arrangement build_arrangement(const TriangleGroup& G, const CurveSystem& C, int depth, const Tolerances& tol = {});

struct Cell {
    HPoint center;
    GroupElement witness;
};

std::vector<Cell> cell_tiling(const Arrangement& A);
// Distinct images of x within radius of the base center, each with one transporting element.
std::vector<Cell> orbit_cells(const Arrangement& A, HPoint x, double radius);
std::vector<Cell> cell_tiling(const TriangleGroup& G, const CurveSystem& C, int depth, const Tolerances& tol = {});

// Vertices of the arrangement cell containing x, counterclockwise; empty when
// the cell is not closed off by lines within reach.
std::vector<HPoint> cell_polygon(const Arrangement& A, HPoint x, double reach = 3.0);

struct TypedCell {
    HPoint center;
    char vertex;  // 'P', 'Q' or 'R': the cone point inside the cell
};

// Cone points of every type within radius of the base center, off all lines.
std::vector<TypedCell> typed_cells(const Arrangement& A, double radius);

struct AdjacentElement {
    GroupElement element;
    hyp2::IsometryClass cls;
    bool on_boundary = false;
};

struct AdjacencyReport {
    HPoint base_center;
    HPoint neighbor_center;
    GroupElement neighbor_witness;
    bool across_vertex = false;  // cells meet at a crossing rather than along an edge
    int stabilizer_order = 0;
    std::vector<AdjacentElement> elements;
    int elliptic = 0;
    int hyperbolic = 0;
    int parabolic = 0;
    int boundary_axes = 0;
};

// rank selects among the nearest touching same-type cells (0 = canonical)
AdjacencyReport adjacency_isometries(const Arrangement& A, int rank = 0);
AdjacencyReport adjacency_isometries(const TriangleGroup& G, const CurveSystem& C, int depth,
                                     const Tolerances& tol = {});

// Number of neighbouring cells tied for the canonical choice.
int touching_neighbor_count(const Arrangement& A);

int crossing_count(const Arrangement& A, const Isometry& g);
int crossing_count(const TriangleGroup& G, const CurveSystem& C, const GroupElement& g, int depth,
                   const Tolerances& tol = {});

}  // namespace orbiflow::trigroup
