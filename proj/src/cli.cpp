#include "ducci/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include <CLI11.hpp>

#include "ducci/errors.hpp"
#include "ducci/report_json.hpp"

namespace ducci::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

const char* format_name(Format f) {
    switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::plain: return "plain";
    }
    return "json";
}

struct Flags {
    std::vector<std::uint64_t> primes;
    std::string format = "json";
};

void add_common(CLI::App* sub, RunConfig& cfg, Flags& flags, bool multi_prime = false) {
    if (multi_prime)
        sub->add_option("--p", flags.primes, "Primes (comma separated)")->delimiter(',');
    else
        sub->add_option("--p", flags.primes, "Prime p")->expected(1);
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_flag("--no-meta", [&cfg](std::int64_t) { cfg.meta = false; }, "Omit the metadata header");
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
    RunConfig cfg;
    Flags flags;
    CLI::App app{"p-adic and classical Ducci sequences: iteration, cycles, census, claim checks", "ducci"};
    app.require_subcommand(1, 1);

    auto* step = app.add_subcommand("step", "One p-adic Ducci step of a rational seed or a P-state");
    add_common(step, cfg, flags);
    auto* step_seed = step->add_option("--seed", cfg.seed, "Rational seed, e.g. 0,1,3 or 1/3,1/9");
    auto* step_state = step->add_option("--state", cfg.state, "P-state, e.g. 3^1,3^2,0");
    step_seed->excludes(step_state);

    auto* run = app.add_subcommand("run", "Trajectory alpha^(0..k)");
    add_common(run, cfg, flags);
    run->add_option("--seed", cfg.seed, "Rational seed")->required();
    run->add_option("--k", cfg.k, "Number of steps");

    auto* cycle = app.add_subcommand("cycle", "Preperiod and period of a seed");
    add_common(cycle, cfg, flags);
    cycle->add_option("--seed", cfg.seed, "Rational seed")->required();
    cycle->add_option("--max-steps", cfg.max_steps, "Step budget")->check(CLI::PositiveNumber);

    auto* census = app.add_subcommand("census", "Exhaustive attractor census of the symbolic state space");
    add_common(census, cfg, flags);
    census->add_option("--n", cfg.n, "Tuple length")->check(CLI::PositiveNumber);
    census->add_option("--bound", cfg.bound, "Exponent bound B")->check(CLI::NonNegativeNumber);
    census->add_option("--cap", cfg.census_cap, "Maximum number of states");
    census->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "Check the claims C1..C6 against brute force");
    add_common(verify, cfg, flags, true);
    verify->add_option("--claims", cfg.claims, "Claims to check (comma separated)")->delimiter(',');
    auto* verify_n = verify->add_option("--n", cfg.n, "Largest tuple length (lengths 2..n are used)")->check(CLI::Range(2, 16));
    verify->add_option("--bound", cfg.bound, "Exponent bound for sweeps and censuses")->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", cfg.samples, "Random samples for the homogeneity check");
    verify->add_option("--seeds", cfg.seeds, "Random seeds for the periodicity checks");
    verify->add_option("--max-steps", cfg.max_steps, "Step budget per seed")->check(CLI::PositiveNumber);

    auto* compare = app.add_subcommand("compare", "Classical and p-adic trajectories of an integer seed side by side");
    add_common(compare, cfg, flags);
    compare->add_option("--seed", cfg.seed, "Integer seed")->required();
    compare->add_option("--k", cfg.k, "Number of steps");

    auto* xor_census = app.add_subcommand("xor-census", "Attractor census of the XOR Ducci map on F_2^n");
    add_common(xor_census, cfg, flags);
    xor_census->add_option("--n", cfg.n, "Tuple length")->required()->check(CLI::PositiveNumber);

    auto* classical = app.add_subcommand("classical-check", "Classical collapse for n a power of two");
    add_common(classical, cfg, flags);
    classical->add_option("--n", cfg.n, "Tuple length (power of two)")->required();
    classical->add_option("--bound", cfg.bound, "Seeds range over [0, bound]^n")->required();
    classical->add_option("--step-cap", cfg.step_cap, "Steps before a seed counts as a violation");

    // CLI11 wants argv in reverse order without the program name.
    std::vector<std::string> args;
    if (argv.size() > 1) args.assign(argv.begin() + 1, argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "verify" && verify_n->count() == 0) cfg.n = 4;
    cfg.format = flags.format == "csv" ? Format::csv : flags.format == "plain" ? Format::plain : Format::json;

    const bool needs_prime = cfg.subcommand != "xor-census" && cfg.subcommand != "classical-check";
    if (needs_prime && flags.primes.empty()) throw UsageError("--p is required for " + cfg.subcommand);
    for (auto p : flags.primes)
        if (!is_prime(p)) throw UsageError("p must be prime (got " + std::to_string(p) + ")");
    if (!flags.primes.empty()) cfg.p = flags.primes.front();
    cfg.primes = flags.primes;

    if (cfg.subcommand == "step" && !cfg.seed && !cfg.state) throw UsageError("step needs --seed or --state");
    try {
        if (cfg.seed) parse_seed(*cfg.seed, Prime(cfg.p));
        if (cfg.state) parse_pstate(*cfg.state, Prime(cfg.p));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.format == Format::csv && cfg.subcommand != "census" && cfg.subcommand != "xor-census")
        throw UsageError("--format csv is only available for census and xor-census");
    for (const auto& id : cfg.claims)
        if (std::find(known_claims().begin(), known_claims().end(), id) == known_claims().end())
            throw UsageError("unknown claim '" + id + "' (expected C1..C6)");
    return cfg;
}

namespace {

Json meta_header() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return Json{{"tool", "ducci"}, {"version", kVersion}, {"generated_at", stamp}};
}

void render_plain(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_plain(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) render_plain(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << '\n';
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

struct Output {
    Json params;
    Json result;
    std::optional<std::string> csv;
};

Json state_info(const PState& s) {
    return Json{{"state", to_string(s)}, {"mod2", to_string(project_mod2(s))}};
}

Output run_step(const RunConfig& cfg) {
    const Prime p(cfg.p);
    Output o;
    PState image{{}, p};
    Json input;
    if (cfg.seed) {
        const RationalState seed = parse_seed(*cfg.seed, p);
        o.params = {{"p", cfg.p}, {"seed", to_string(seed)}};
        image = ducci_p_seed_step(seed);
        input = {{"state", to_string(seed)}};
        if (auto embedded = as_pstate(seed)) {
            input["mod2"] = to_string(project_mod2(*embedded));
            input["xor_of_mod2"] = to_string(xor_ducci(project_mod2(*embedded)));
        }
    } else {
        const PState state = parse_pstate(*cfg.state, p);
        o.params = {{"p", cfg.p}, {"state", to_string(state)}};
        image = ducci_p_symbolic_step(state);
        input = state_info(state);
        input["xor_of_mod2"] = to_string(xor_ducci(project_mod2(state)));
    }
    o.result = {{"input", input}, {"image", state_info(image)}};
    return o;
}

Output run_trajectory(const RunConfig& cfg) {
    const RationalState seed = parse_seed(*cfg.seed, Prime(cfg.p));
    return {{{"p", cfg.p}, {"seed", to_string(seed)}, {"k", cfg.k}}, to_json(trajectory(seed, cfg.k)), {}};
}

Output run_cycle(const RunConfig& cfg) {
    const RationalState seed = parse_seed(*cfg.seed, Prime(cfg.p));
    return {{{"p", cfg.p}, {"seed", to_string(seed)}, {"max_steps", cfg.max_steps}},
            to_json(find_cycle(seed, cfg.max_steps)),
            {}};
}

Output run_census(const RunConfig& cfg) {
    const CensusRecord record = enumerate_census(cfg.n, Prime(cfg.p), cfg.bound, cfg.census_cap, cfg.workers);
    return {{{"p", cfg.p}, {"n", cfg.n}, {"bound", cfg.bound}}, to_json(record), census_csv(record)};
}

Output run_verify(const RunConfig& cfg) {
    VerifyConfig vc;
    vc.primes = cfg.primes;
    vc.lengths.clear();
    for (std::size_t n = 2; n <= cfg.n; ++n) vc.lengths.push_back(n);
    vc.bound = cfg.bound;
    vc.homogeneity_samples = cfg.samples;
    vc.periodicity_samples = cfg.seeds;
    vc.max_steps = cfg.max_steps;
    if (!cfg.claims.empty()) vc.claims = cfg.claims;

    Json claims = Json::array();
    for (const auto& r : verify_claims(vc)) claims.push_back(to_json(r));
    Json params{{"p", cfg.primes}, {"lengths", vc.lengths}, {"bound", vc.bound}, {"claims", vc.claims},
                {"samples", vc.homogeneity_samples}, {"seeds", vc.periodicity_samples}};
    return {std::move(params), Json{{"claims", std::move(claims)}}, {}};
}

Output run_compare(const RunConfig& cfg) {
    const Prime p(cfg.p);
    const RationalState seed = parse_seed(*cfg.seed, p);
    std::vector<BigInt> classical;
    for (const Rational& x : seed.entries) {
        if (!x.is_integer()) throw std::invalid_argument("compare needs an integer seed (got " + x.to_string() + ")");
        classical.push_back(x.numerator());
    }
    Json classical_states = Json::array();
    auto text = [](const std::vector<BigInt>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
        return s;
    };
    classical_states.push_back(text(classical));
    for (std::size_t i = 0; i < cfg.k; ++i) {
        classical = ducci_classical(classical);
        classical_states.push_back(text(classical));
    }
    Json padic = to_json(trajectory(seed, cfg.k))["states"];
    return {{{"p", cfg.p}, {"seed", to_string(seed)}, {"k", cfg.k}},
            {{"classical", std::move(classical_states)}, {"padic", std::move(padic)}},
            {}};
}

Output run_xor_census(const RunConfig& cfg) {
    const XorCensus census = xor_period_census(cfg.n);
    return {{{"n", cfg.n}}, to_json(census), census_csv(census)};
}

Output run_classical(const RunConfig& cfg) {
    return {{{"n", cfg.n}, {"bound", cfg.bound}, {"step_cap", cfg.step_cap}},
            to_json(classical_collapse_check(cfg.n, cfg.bound, cfg.step_cap)),
            {}};
}

} // namespace

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Output o;
    try {
        if (cfg.subcommand == "step") o = run_step(cfg);
        else if (cfg.subcommand == "run") o = run_trajectory(cfg);
        else if (cfg.subcommand == "cycle") o = run_cycle(cfg);
        else if (cfg.subcommand == "census") o = run_census(cfg);
        else if (cfg.subcommand == "verify") o = run_verify(cfg);
        else if (cfg.subcommand == "compare") o = run_compare(cfg);
        else if (cfg.subcommand == "xor-census") o = run_xor_census(cfg);
        else if (cfg.subcommand == "classical-check") o = run_classical(cfg);
        else {
            err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
            return kExitUsage;
        }
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream body;
    if (cfg.format == Format::csv) {
        body << *o.csv;
    } else {
        o.params["format"] = format_name(cfg.format);
        const Json meta = meta_header();
        const Json doc = envelope(cfg.subcommand, std::move(o.params), std::move(o.result), cfg.meta ? &meta : nullptr);
        if (cfg.format == Format::plain) render_plain(doc, "", body);
        else body << doc.dump(2) << '\n';
    }
    out << body.str() << std::flush;
    return kExitOk;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(argv);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return dispatch(cfg, out, err);
}

} // namespace ducci::cli
