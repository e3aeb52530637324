#include "ducci/report_json.hpp"

#include <sstream>

namespace ducci {

Json to_json(const CycleReport& report) {
    Json j;
    j["p"] = report.witness.prime.value();
    j["n"] = report.witness.size();
    j["preperiod"] = report.preperiod;
    j["period"] = report.period;
    j["cycle_length"] = report.period;
    j["witness"] = to_string(report.witness);
    j["witness_is_zero"] = report.witness.is_all_zero();
    j["steps_used"] = report.steps_used;
    return j;
}

Json to_json(const Trajectory& t) {
    Json states = Json::array();
    states.push_back(to_string(t.seed));
    for (const PState& s : t.images) states.push_back(to_string(s));
    Json j;
    j["p"] = t.seed.prime.value();
    j["n"] = t.seed.size();
    j["k"] = t.images.size();
    j["states"] = std::move(states);
    return j;
}

namespace {

Json period_counts(const std::vector<PeriodCount>& cycles) {
    Json out = Json::array();
    for (const auto& c : cycles) out.push_back({{"period", c.period}, {"member_count", c.member_count}});
    return out;
}

Json attractors(const std::vector<Attractor>& list) {
    Json out = Json::array();
    for (const auto& a : list)
        out.push_back({{"period", a.period}, {"representative", a.representative}, {"basin_size", a.basin_size}});
    return out;
}

} // namespace

Json to_json(const CensusRecord& record) {
    Json j;
    j["n"] = record.n;
    j["p"] = record.prime.value();
    j["bound"] = record.bound;
    j["state_count"] = record.state_count;
    j["cycles"] = period_counts(record.cycles);
    j["attractors"] = attractors(record.attractors);
    j["max_preperiod"] = record.max_preperiod;
    j["all_collapse_to_zero"] = record.all_collapse_to_zero;
    return j;
}

Json to_json(const XorCensus& census) {
    Json j;
    j["n"] = census.n;
    j["state_count"] = census.state_count;
    j["cycles"] = period_counts(census.cycles);
    j["attractors"] = attractors(census.attractors);
    j["max_preperiod"] = census.max_preperiod;
    j["all_reach_zero"] = census.all_reach_zero;
    return j;
}

Json to_json(const ClassicalCollapseReport& report) {
    Json j;
    j["n"] = report.n;
    j["value_bound"] = report.value_bound;
    j["step_cap"] = report.step_cap;
    j["seeds_tested"] = report.seeds_tested;
    j["max_steps_to_zero"] = report.max_steps_to_zero;
    j["slowest_seed"] = report.slowest_seed;
    j["violations"] = report.violations;
    j["all_reach_zero"] = report.violations.empty();
    return j;
}

Json to_json(const Counterexample& cx) {
    Json j;
    j["kind"] = cx.kind;
    j["p"] = cx.p;
    j["seed"] = cx.seed;
    if (cx.scalar) j["scalar"] = *cx.scalar;
    j["trace"] = cx.trace;
    return j;
}

Json to_json(const ClaimReport& report) {
    Json j;
    j["claim"] = report.id;
    j["statement"] = report.statement;
    j["verdict"] = to_string(report.verdict);
    j["counterexample"] = report.counterexample ? to_json(*report.counterexample) : Json(nullptr);
    j["samples_tested"] = report.samples_tested;
    j["notes"] = report.notes;
    return j;
}

namespace {

std::string csv_rows(const std::string& prefix, const std::vector<PeriodCount>& cycles) {
    std::ostringstream out;
    for (const auto& c : cycles) out << prefix << c.period << ',' << c.member_count << '\n';
    return out.str();
}

} // namespace

std::string census_csv(const CensusRecord& record) {
    const std::string prefix = std::to_string(record.n) + ',' + std::to_string(record.prime.value()) + ',' +
                               std::to_string(record.bound) + ',';
    return "n,p,B,period,member_count\n" + csv_rows(prefix, record.cycles);
}

std::string census_csv(const XorCensus& census) {
    return "n,p,B,period,member_count\n" + csv_rows(std::to_string(census.n) + ",2,,", census.cycles);
}

Json envelope(const std::string& command, Json params, Json result, const Json* meta) {
    Json j;
    if (meta) j["meta"] = *meta;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    return j;
}

} // namespace ducci
