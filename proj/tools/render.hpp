#pragma once

#include <string>

#include "orbiflow/cases.hpp"
#include "orbiflow/hyp2.hpp"

namespace orbiflow::cli {

struct SvgStats {
    int cells = 0;        // cell polygons drawn
    int highlighted = 0;  // base and neighbour cells drawn
    int lines = 0;
    int axes = 0;
};

// Poincare disc drawing of the arrangement for one case, centred on the base
// cell; output bytes depend only on the arguments.
std::string render_tiling_svg(CaseId id, int depth, const hyp2::Tolerances& tol, SvgStats* stats = nullptr);

}  // namespace orbiflow::cli
