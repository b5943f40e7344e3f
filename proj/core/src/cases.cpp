#include "orbiflow/cases.hpp"

#include "orbiflow/error.hpp"

namespace orbiflow {

Triple triple_of(CaseId id) {
    switch (id) {
        case CaseId::C237: return {2, 3, 7};
        case CaseId::C245: return {2, 4, 5};
        case CaseId::C246: return {2, 4, 6};
        case CaseId::C334: return {3, 3, 4};
        case CaseId::C344: return {3, 4, 4};
    }
    return {0, 0, 0};
}

std::string case_name(CaseId id) {
    Triple t = triple_of(id);
    return std::to_string(t.p) + std::to_string(t.q) + std::to_string(t.r);
}

std::optional<CaseId> parse_case(std::string_view s) {
    for (CaseId id : kAllCases)
        if (case_name(id) == s) return id;
    return std::nullopt;
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::DegenerateTriangle: return "degenerate-triangle";
        case ErrorKind::NonHyperbolic: return "non-hyperbolic";
        case ErrorKind::DedupAmbiguity: return "dedup-ambiguity";
        case ErrorKind::NeighborNotFound: return "neighbor-not-found";
        case ErrorKind::DepthInsufficient: return "depth-insufficient";
        case ErrorKind::Tangency: return "tangency";
        case ErrorKind::InconsistentComplex: return "inconsistent-complex";
        case ErrorKind::Overflow: return "overflow";
        case ErrorKind::NotPeriodic: return "not-periodic";
    }
    return "?";
}

}  // namespace orbiflow
