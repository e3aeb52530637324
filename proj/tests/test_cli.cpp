#include <doctest.h>

#include <sstream>

#include "ducci/cli.hpp"
#include "ducci/report_json.hpp"

using namespace ducci;
using namespace ducci::cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ducci");
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

RunConfig parse(std::vector<std::string> args) {
    args.insert(args.begin(), "ducci");
    return parse_args(args);
}

} // namespace

TEST_CASE("parse_args maps flags onto the config") {
    const RunConfig c = parse({"cycle", "--p", "3", "--seed", "0,1,3"});
    CHECK(c.subcommand == "cycle");
    CHECK(c.p == 3);
    CHECK(*c.seed == "0,1,3");

    const RunConfig r = parse({"run", "--p", "3", "--seed", "1/3,1/9", "--k", "5", "--format", "json"});
    CHECK(r.subcommand == "run");
    CHECK(*r.seed == "1/3,1/9");
    CHECK(r.k == 5);
    CHECK(r.format == Format::json);

    const RunConfig v = parse({"verify", "--p", "2,3", "--claims", "C1,C5", "--no-meta"});
    CHECK(v.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(v.claims == std::vector<std::string>{"C1", "C5"});
    CHECK(v.n == 4);
    CHECK_FALSE(v.meta);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_WITH_AS(parse({"cycle", "--p", "4", "--seed", "1"}), "p must be prime (got 4)", UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--p", "3", "--seed", "1/0"}), UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--p", "3", "--seed", ""}), UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--p", "3", "--seed", "1, 2"}), UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--p", "3", "--seed", "1", "--bogus"}), UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--seed", "1"}), UsageError);
    CHECK_THROWS_AS(parse({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse({}), UsageError);
    CHECK_THROWS_AS(parse({"step", "--p", "3"}), UsageError);
    CHECK_THROWS_AS(parse({"step", "--p", "3", "--state", "5^1"}), UsageError);
    CHECK_THROWS_AS(parse({"cycle", "--p", "3", "--seed", "1", "--format", "csv"}), UsageError);
    CHECK_THROWS_AS(parse({"verify", "--p", "3", "--claims", "C7"}), UsageError);

    const Result bad = invoke({"cycle", "--p", "4", "--seed", "1"});
    CHECK(bad.status == kExitUsage);
    CHECK(bad.err.find("p must be prime") != std::string::npos);
    CHECK(bad.out.empty());
}

TEST_CASE("cycle report") {
    const Result r = invoke({"cycle", "--p", "3", "--seed", "1,3", "--no-meta"});
    REQUIRE(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "cycle");
    CHECK(j["result"]["p"] == 3);
    CHECK(j["result"]["preperiod"] == 2);
    CHECK(j["result"]["period"] == 1);
    CHECK_FALSE(j.contains("meta"));
}

TEST_CASE("census and verify reports") {
    const Json census = Json::parse(invoke({"census", "--p", "3", "--n", "2", "--bound", "1", "--no-meta"}).out);
    CHECK(census["result"]["all_collapse_to_zero"] == true);
    CHECK(census["result"]["state_count"] == 16);

    const Json verify = Json::parse(invoke({"verify", "--p", "3", "--claims", "C1", "--no-meta"}).out);
    REQUIRE(verify["result"]["claims"].size() == 1);
    CHECK(verify["result"]["claims"][0]["verdict"] == "confirmed");
}

TEST_CASE("step replays the parity counterexample") {
    const Json j = Json::parse(invoke({"step", "--p", "3", "--state", "3^1,3^2", "--no-meta"}).out);
    CHECK(j["result"]["image"]["state"] == "3^-1,3^-1");
    CHECK(j["result"]["image"]["mod2"] == "11");
    CHECK(j["result"]["input"]["xor_of_mod2"] == "00");

    const Json s = Json::parse(invoke({"step", "--p", "3", "--seed", "1/3,1/9", "--no-meta"}).out);
    CHECK(s["result"]["image"]["state"] == "3^2,3^2");
}

TEST_CASE("run, compare, xor-census, classical-check") {
    const Json run_j = Json::parse(invoke({"run", "--p", "3", "--seed", "1,3", "--k", "2", "--no-meta"}).out);
    CHECK(run_j["result"]["states"] == Json::array({"1,3", "3^0,3^0", "0,0"}));

    const Json cmp = Json::parse(invoke({"compare", "--p", "3", "--seed", "0,1,3", "--k", "2", "--no-meta"}).out);
    CHECK(cmp["result"]["classical"] == Json::array({"0,1,3", "1,2,3", "1,1,2"}));
    CHECK(cmp["result"]["padic"][2] == "0,3^1,3^1");
    CHECK(invoke({"compare", "--p", "3", "--seed", "1/2,1"}).status == kExitUsage);

    const Json x = Json::parse(invoke({"xor-census", "--n", "3", "--no-meta"}).out);
    CHECK(x["result"]["all_reach_zero"] == false);
    CHECK(invoke({"xor-census", "--n", "3", "--format", "csv"}).out ==
          "n,p,B,period,member_count\n3,2,,1,1\n3,2,,3,3\n");

    const Json c = Json::parse(invoke({"classical-check", "--n", "4", "--bound", "1", "--no-meta"}).out);
    CHECK(c["result"]["all_reach_zero"] == true);
    CHECK(c["result"]["seeds_tested"] == 16);
}

TEST_CASE("census csv rows") {
    const Result r = invoke({"census", "--p", "3", "--n", "3", "--bound", "1", "--format", "csv"});
    CHECK(r.out == "n,p,B,period,member_count\n3,3,1,1,1\n3,3,1,3,3\n3,3,1,6,6\n");
}

TEST_CASE("plain format") {
    const Result r = invoke({"cycle", "--p", "3", "--seed", "0,1,3", "--format", "plain", "--no-meta"});
    CHECK(r.out.find("result.period: 6\n") != std::string::npos);
}

TEST_CASE("budget errors exit with 2") {
    CHECK(invoke({"cycle", "--p", "3", "--seed", "0,1,3", "--max-steps", "3"}).status == kExitBudget);
    CHECK(invoke({"census", "--p", "3", "--n", "30", "--bound", "1"}).status == kExitBudget);
    CHECK(invoke({"xor-census", "--n", "30"}).status == kExitBudget);
}

TEST_CASE("meta header is present unless suppressed") {
    const Json with = Json::parse(invoke({"cycle", "--p", "3", "--seed", "1"}).out);
    CHECK(with["meta"]["tool"] == "ducci");
    CHECK(with["meta"].contains("generated_at"));
}

TEST_CASE("help exits 0") {
    const Result r = invoke({"--help"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cycle", "--p", "3", "--seed", "0,1,3", "--no-meta"},
             {"census", "--p", "5", "--n", "4", "--bound", "1", "--no-meta"},
             {"verify", "--p", "3", "--claims", "C2,C3", "--samples", "200", "--seeds", "50", "--no-meta"}})
        CHECK(invoke(args).out == invoke(args).out);
}
