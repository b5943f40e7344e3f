#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbiflow/cases.hpp"
#include "orbiflow/error.hpp"

using namespace orbiflow;

TEST_CASE("case names round-trip") {
    for (CaseId id : kAllCases) {
        auto back = parse_case(case_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(parse_case("236").has_value());
    CHECK_FALSE(parse_case("").has_value());
}

TEST_CASE("triples are hyperbolic and ordered") {
    for (CaseId id : kAllCases) {
        Triple t = triple_of(id);
        CHECK(t.p <= t.q);
        CHECK(t.q <= t.r);
        CHECK(t.q * t.r + t.p * t.r + t.p * t.q < t.p * t.q * t.r);
    }
}

TEST_CASE("errors carry their subsystem") {
    Error e(ErrorKind::Tangency, "trigroup", "touching");
    CHECK(e.kind() == ErrorKind::Tangency);
    CHECK(e.subsystem() == "trigroup");
    CHECK(std::string(e.what()) == "trigroup: touching");
    CHECK(std::string(to_string(ErrorKind::DepthInsufficient)).size() > 0);
}
