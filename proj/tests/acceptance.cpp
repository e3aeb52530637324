// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ducci/census.hpp"
#include "ducci/dynamics.hpp"
#include "ducci/errors.hpp"
#include "ducci/verify.hpp"
#include "oracle.hpp"

using namespace ducci;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s; // 0 = none
    std::function<Outcome()> body;
};

PState random_pstate(std::mt19937_64& rng, Prime p, std::size_t max_n, std::int64_t bound) {
    std::uniform_int_distribution<std::size_t> len(1, max_n);
    std::uniform_int_distribution<std::int64_t> digit(-bound - 1, bound);
    PState s{{}, p};
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = digit(rng);
        s.entries.push_back(d < -bound ? PElement::zero() : PElement::pow(d));
    }
    return s;
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(DUCCI_CLI) + " " + args;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Criterion 2 and 3 share the same seeds.
std::vector<RationalState> periodicity_seeds() {
    std::mt19937_64 rng(2024);
    const std::array<std::uint64_t, 3> primes{2, 3, 5};
    std::vector<RationalState> seeds;
    for (int i = 0; i < 1000; ++i) seeds.push_back(random_seed(rng, Prime(primes[i % 3]), 6, 1000));
    return seeds;
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(1);
    const std::array<std::uint64_t, 4> primes{2, 3, 5, 7};
    std::uint64_t mismatches = 0;
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t p = primes[i % 4];
        const PState s = random_pstate(rng, Prime(p), 6, 8);
        const PState symbolic = ducci_p_symbolic_step(s);
        const RationalState values = materialize(s);
        if (symbolic != ducci_p_seed_step(values) || materialize(symbolic).entries != oracle::step(values.entries, p))
            ++mismatches;
    }
    return {mismatches == 0, "10000 states, " + std::to_string(mismatches) + " mismatches"};
}

Outcome eventual_periodicity() {
    std::uint64_t failures = 0, max_r = 0, max_s = 0;
    for (const auto& seed : periodicity_seeds()) {
        try {
            const CycleReport c = find_cycle(seed);
            if (!replay_check(c, seed)) ++failures;
            max_r = std::max(max_r, c.preperiod);
            max_s = std::max(max_s, c.period);
        } catch (const BudgetError&) {
            ++failures;
        }
    }
    return {failures == 0, "1000 seeds, " + std::to_string(failures) + " failures, max r " + std::to_string(max_r) +
                               ", max s " + std::to_string(max_s)};
}

Outcome exponent_invariance() {
    std::uint64_t violations = 0, states = 0;
    for (const auto& seed : periodicity_seeds()) {
        const CycleReport c = find_cycle(seed);
        PState s = ducci_p_seed_step(seed);
        std::int64_t bound = 0;
        for (PElement e : s.entries)
            if (!e.is_zero()) bound = std::max(bound, e.exponent() < 0 ? -e.exponent() : e.exponent());
        for (std::uint64_t k = 1; k <= c.preperiod + c.period; ++k, s = ducci_p_symbolic_step(s)) {
            ++states;
            for (PElement e : s.entries)
                if (!e.is_zero() && (e.exponent() < -bound || e.exponent() > bound)) ++violations;
        }
    }
    return {violations == 0, std::to_string(states) + " states checked, " + std::to_string(violations) + " violations"};
}

Outcome pairs_collapse() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t pv : {2, 3, 5}) {
        const Prime p(pv);
        const CensusRecord r = enumerate_census(2, p, 4);
        std::uint64_t within_two = 0;
        for (std::uint64_t i = 0; i < r.state_count; ++i)
            if (ducci_p_symbolic_step(ducci_p_symbolic_step(census_state(i, 2, p, 4))).is_all_zero()) ++within_two;
        const bool sole_fixed_point = r.attractors.size() == 1 && r.attractors[0].period == 1 &&
                                      r.attractors[0].representative == "0,0";
        ok &= r.all_collapse_to_zero && sole_fixed_point && r.max_preperiod <= 2 && within_two == r.state_count;
        detail += "p=" + std::to_string(pv) + ": " + std::to_string(within_two) + "/" + std::to_string(r.state_count) +
                  " zero within 2 steps; ";
    }
    return {ok, detail};
}

Outcome parity_refutation() {
    VerifyConfig c;
    c.primes = {3};
    c.claims = {"C5"};
    const ClaimReport r = verify_claims(c).front();
    if (r.verdict != Verdict::refuted || !r.counterexample || r.counterexample->seed != "3^1,3^2")
        return {false, "C5 did not emit (3^1,3^2)"};
    const PState s = parse_pstate(r.counterexample->seed, Prime(3));
    const bool api = to_string(project_mod2(ducci_p_symbolic_step(s))) == "11" &&
                     to_string(xor_ducci(project_mod2(s))) == "00";
    const std::string cli = run_cli("step --p 3 --state 3^1,3^2 --no-meta");
    const bool via_cli = cli.find("\"mod2\": \"11\"") != std::string::npos &&
                         cli.find("\"xor_of_mod2\": \"00\"") != std::string::npos;
    return {api && via_cli, "counterexample 3^1,3^2: image parity 11, XOR of parity 00; CLI replay " +
                                std::string(via_cli ? "ok" : "FAILED")};
}

Outcome integral_seed_refutation() {
    const RationalState seed = parse_seed("0,1,3", Prime(3));
    const CycleReport c = find_cycle(seed);
    bool cycle_nonzero = true;
    std::set<std::string> members;
    PState s = c.witness;
    for (std::uint64_t k = 0; k < c.period; ++k, s = ducci_p_symbolic_step(s)) {
        cycle_nonzero &= !s.is_all_zero();
        members.insert(to_string(s));
    }
    const CensusRecord census = enumerate_census(3, Prime(3), 1);
    bool listed = false;
    for (const auto& a : census.attractors) listed |= a.period == 6 && members.count(a.representative) == 1;
    const bool ok = c.preperiod == 2 && c.period == 6 && cycle_nonzero && census.state_count == 64 && listed;
    return {ok, "r=" + std::to_string(c.preperiod) + ", s=" + std::to_string(c.period) +
                    ", census 64 states lists the 6-cycle: " + (listed ? "yes" : "no")};
}

Outcome homogeneity() {
    VerifyConfig c;
    c.primes = {3};
    const ClaimReport literal = verify_homogeneity_literal(c);
    const bool refuted = literal.verdict == Verdict::refuted && literal.counterexample &&
                         literal.counterexample->seed == "1,0" && literal.counterexample->scalar == "2" &&
                         literal.counterexample->p == 3;
    c.primes = {2, 3, 5};
    c.homogeneity_samples = 10'000;
    const ClaimReport corrected = verify_homogeneity_corrected(c);
    const bool confirmed = corrected.verdict == Verdict::confirmed && corrected.samples_tested == 10'000;
    return {refuted && confirmed, std::string("literal form refuted by a=2, (1,0): ") + (refuted ? "yes" : "no") +
                                      "; corrected form " + std::to_string(corrected.samples_tested) + " samples, " +
                                      to_string(corrected.verdict)};
}

Outcome classical_collapse() {
    const auto first = classical_collapse_check(4, 15);
    const auto second = classical_collapse_check(4, 15);
    const bool ok = first.seeds_tested == 65'536 && first.violations.empty() &&
                    first.max_steps_to_zero == second.max_steps_to_zero && first.slowest_seed == second.slowest_seed;
    return {ok, "65536 seeds, " + std::to_string(first.violations.size()) + " violations, max steps " +
                    std::to_string(first.max_steps_to_zero) + " (stable: " +
                    (first.max_steps_to_zero == second.max_steps_to_zero ? "yes" : "no") + ")"};
}

Outcome xor_nilpotency() {
    bool ok = true;
    for (std::size_t n : {2, 4, 8, 16}) ok &= xor_period_census(n).all_reach_zero;
    const XorCensus three = xor_period_census(3);
    const bool inventory = three.attractors.size() == 2 && three.attractors[0].period == 1 &&
                           three.attractors[0].representative == "000" && three.attractors[1].period == 3;
    return {ok && inventory, std::string("n in {2,4,8,16} nilpotent: ") + (ok ? "yes" : "no") +
                                 "; n=3 inventory {000} + one 3-cycle: " + (inventory ? "yes" : "no")};
}

Outcome cli_stability() {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"cycle --p 3 --seed 0,1,3 --no-meta", "cycle_p3_seed_0_1_3.json"},
        {"census --p 3 --n 2 --bound 1 --no-meta", "census_p3_n2_b1.json"},
        {"verify --p 3 --claims C1 --no-meta", "verify_p3_c1.json"},
    };
    int good = 0;
    for (const auto& [args, golden] : cases) {
        const std::string a = run_cli(args), b = run_cli(args);
        if (!a.empty() && a == b && a == slurp(std::string(GOLDEN_DIR) + "/" + golden)) ++good;
    }
    return {good == 3, std::to_string(good) + "/3 commands byte-identical to golden files on two runs"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 10, oracle_equivalence},
        {2, "eventual periodicity", 30, eventual_periodicity},
        {3, "exponent-bound invariance", 0, exponent_invariance},
        {4, "n=2 total collapse", 0, pairs_collapse},
        {5, "mod-2 reduction refuted", 0, parity_refutation},
        {6, "integral seeds do not vanish", 1, integral_seed_refutation},
        {7, "homogeneity", 0, homogeneity},
        {8, "classical power-of-2 collapse", 10, classical_collapse},
        {9, "XOR nilpotency", 5, xor_nilpotency},
        {10, "CLI stability", 0, cli_stability},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            o.pass = false;
            o.detail += " [over time limit]";
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %2d %-30s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                    secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
