#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ducci/census.hpp"
#include "ducci/dynamics.hpp"
#include "ducci/verify.hpp"

namespace ducci {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const CycleReport& report);
Json to_json(const Trajectory& trajectory);
Json to_json(const CensusRecord& record);
Json to_json(const XorCensus& census);
Json to_json(const ClassicalCollapseReport& report);
Json to_json(const Counterexample& cx);
Json to_json(const ClaimReport& report);

/// Rows "n,p,B,period,member_count" with a header line.
std::string census_csv(const CensusRecord& record);
std::string census_csv(const XorCensus& census);

/// {"schema_version", "command", "params", "result"}, optionally preceded by "meta".
Json envelope(const std::string& command, Json params, Json result, const Json* meta = nullptr);

} // namespace ducci
