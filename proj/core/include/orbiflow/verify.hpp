#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbiflow/cases.hpp"
#include "orbiflow/error.hpp"
#include "orbiflow/hyp2.hpp"
#include "orbiflow/surgery.hpp"
#include "orbiflow/trigroup.hpp"

namespace orbiflow::verify {

inline constexpr int kSchemaVersion = 1;

struct Config {
    int depth = trigroup::kAdjacencyDepth;
    hyp2::Tolerances tol;
    int trace3_length = 8;
    int catmap_max_period = 4;
    surgery::SeifertConvention convention = surgery::SeifertConvention::Standard;
    bool parallel = true;
};

struct Check {
    std::string check_id;
    std::string expected;
    std::string actual;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

struct CaseRecord {
    CaseId id = CaseId::C237;
    std::vector<Check> checks;
    std::optional<std::string> error;  // subsystem-qualified message when the chain aborted
    std::optional<ErrorKind> error_kind;
    double seconds = 0.0;              // wall clock, kept out of the JSON form

    bool pass() const;
    bool operator==(const CaseRecord& o) const {
        return id == o.id && checks == o.checks && error == o.error && error_kind == o.error_kind;
    }
};

struct Report {
    int schema_version = kSchemaVersion;
    Config config;
    std::vector<CaseRecord> cases;  // ordered by case id
    std::vector<Check> global;
    double global_seconds = 0.0;

    bool pass() const;
    bool has_errors() const;
    bool operator==(const Report& o) const;
};

// Theorem constants each case is checked against.
struct Expected {
    int elements, elliptic, hyperbolic, boundary_axes;
    int chi;
    std::vector<std::pair<long long, long long>> directions;  // per component
    std::pair<long long, long long> total_direction;
    std::optional<int> turning;
    int interior_fixed_points;
    surgery::SlopeCoefficient slope;
    bool second_orbit;
    long long h1_order;
};
Expected expected_for(CaseId id);

CaseRecord verify_case(CaseId id, const Config& cfg);
std::vector<Check> verify_global(const Config& cfg);
Report run(const std::vector<CaseId>& ids, const Config& cfg);

// Parses "all" or a single case name.
std::vector<CaseId> parse_case_filter(const std::string& filter);

std::string to_json(const Report& r, int indent = 2);
Report from_json(const std::string& text);
std::string to_text(const Report& r);

}  // namespace orbiflow::verify
