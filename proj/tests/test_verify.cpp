#include <gtest/gtest.h>

#include "orbiflow/error.hpp"
#include "orbiflow/verify.hpp"

using namespace orbiflow;
using namespace orbiflow::verify;

namespace {

const Report& full_report() {
    static const Report r = run(parse_case_filter("all"), Config{});
    return r;
}

}  // namespace

TEST(Verify, CaseFilter) {
    EXPECT_EQ(parse_case_filter("all").size(), 5u);
    EXPECT_EQ(parse_case_filter("334"), std::vector<CaseId>{CaseId::C334});
    EXPECT_THROW(parse_case_filter("236"), Error);
}

TEST(Verify, AllChecksPass) {
    const Report& r = full_report();
    EXPECT_FALSE(r.has_errors());
    for (const auto& c : r.cases)
        for (const auto& chk : c.checks) EXPECT_TRUE(chk.pass) << chk.check_id << " " << chk.actual;
    for (const auto& chk : r.global) EXPECT_TRUE(chk.pass) << chk.check_id << " " << chk.actual;
    EXPECT_TRUE(r.pass());
}

TEST(Verify, CheckIdsArePrefixedByCase) {
    for (const auto& c : full_report().cases) {
        ASSERT_FALSE(c.checks.empty());
        for (const auto& chk : c.checks) EXPECT_EQ(chk.check_id.rfind(case_name(c.id) + ".", 0), 0u);
    }
}

TEST(Verify, JsonRoundTrip) {
    const Report& r = full_report();
    std::string text = to_json(r);
    Report back = from_json(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_json(back), text);
    EXPECT_EQ(text.find("seconds"), std::string::npos);
}

TEST(Verify, SequentialAndParallelAgree) {
    Config seq;
    seq.parallel = false;
    EXPECT_EQ(to_json(run(parse_case_filter("all"), seq)), to_json(full_report()));
}

TEST(Verify, ShallowDepthFailsLoudly) {
    Config cfg;
    cfg.depth = 4;
    auto rec = verify_case(CaseId::C237, cfg);
    EXPECT_FALSE(rec.pass());
    ASSERT_TRUE(rec.error_kind.has_value());
    EXPECT_EQ(*rec.error_kind, ErrorKind::DepthInsufficient);
}

TEST(Verify, ReversedConventionAgrees) {
    Config cfg;
    cfg.convention = surgery::SeifertConvention::Reversed;
    for (const auto& chk : verify_global(cfg)) EXPECT_TRUE(chk.pass) << chk.check_id;
}

TEST(Verify, MalformedJsonIsRejected) {
    EXPECT_THROW(from_json("{\"schema_version\": 99}"), std::exception);
    EXPECT_THROW(from_json("not json"), std::exception);
}
