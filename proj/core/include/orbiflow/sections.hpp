#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbiflow/cases.hpp"
#include "orbiflow/trigroup.hpp"

namespace orbiflow::sections {

using Rational = boost::rational<long long>;

enum class LabelKind { None, TurningPoint, FiberTwist };

struct BoundaryLabel {
    int orbit = 0;
    Rational longitudinal{0};
    Rational meridional{0};
    LabelKind kind = LabelKind::None;
    std::string name;
};

struct Side {
    int polygon = 0;
    int index = 0;
    auto operator<=>(const Side&) const = default;
};

// reversed = true glues side a against side b with opposite traversal, the
// orientation-compatible gluing for counterclockwise polygons
struct Pairing {
    Side a, b;
    bool reversed = true;
};

struct SectionComplex {
    CaseId id = CaseId::C237;
    std::string name;
    std::vector<int> polygons;  // side count per polygon
    std::vector<Pairing> pairings;
    std::vector<std::pair<Side, BoundaryLabel>> boundary;
    double fiber_fraction = 1.0;  // share of the unit fiber over the curve taken by the section

    const BoundaryLabel* label(Side s) const;
};

// Throws InconsistentComplex when a side is paired twice or is neither
// paired nor labelled.
void validate(const SectionComplex& S);

SectionComplex section(CaseId id);

int vertex_count(const SectionComplex& S);
int edge_count(const SectionComplex& S);
int euler_characteristic(const SectionComplex& S);
bool orientable(const SectionComplex& S);

struct BoundaryComponent {
    int orbit = 0;
    std::vector<Side> sides;
    long long a = 0, b = 1;  // primitive direction, b > 0
    long long multiplicity = 1;
    Rational turning{0};
};

std::vector<BoundaryComponent> boundary_components(const SectionComplex& S);

struct Direction {
    long long a = 0, b = 0;
    bool operator==(const Direction&) const = default;
};
Direction total_direction(const std::vector<BoundaryComponent>& comps);

struct Turning {
    Rational value{0};
    bool applicable = false;  // false when no turning-point labels exist
};
Turning meridional_turning(const SectionComplex& S);

int blow_down_genus(const SectionComplex& S);
std::vector<int> separatrix_count(const SectionComplex& S);

struct FirstReturnSummary {
    CaseId id = CaseId::C237;
    int boundary_orbit_components = 0;  // c
    int boundary_fixed_points = 0;      // 1 when c = 1
    int boundary_cycle_period = 0;      // c when c > 1, else 0
    int interior_fixed_points = 0;
    int total_fixed_points = 0;
};

// Times a closed orbit crossing the section curve `crossings` times per
// period meets the section, given the share of the fiber it occupies.
int section_hits(const SectionComplex& S, int crossings);

// crossings[i] is the crossing count of adjacency.elements[i], ignored
// for non-hyperbolic elements.
FirstReturnSummary first_return_summary(const SectionComplex& S, const trigroup::AdjacencyReport& adjacency,
                                        const std::vector<int>& crossings);
FirstReturnSummary first_return_summary(const SectionComplex& S, const trigroup::Arrangement& A);

}  // namespace orbiflow::sections
