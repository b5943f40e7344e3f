#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace orbiflow {

enum class CaseId { C237, C245, C246, C334, C344 };

struct Triple {
    int p, q, r;
};

inline constexpr std::array<CaseId, 5> kAllCases{CaseId::C237, CaseId::C245, CaseId::C246, CaseId::C334,
                                                 CaseId::C344};

Triple triple_of(CaseId id);
std::string case_name(CaseId id);
std::optional<CaseId> parse_case(std::string_view s);

}  // namespace orbiflow
