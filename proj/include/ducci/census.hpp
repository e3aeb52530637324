#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ducci/operators.hpp"

namespace ducci {

inline constexpr std::uint64_t kDefaultCensusCap = 100'000'000;

/// Attractor summary of a functional graph given as a successor table.
struct FunctionalGraphSummary {
    struct Cycle {
        std::uint32_t period;
        std::vector<std::uint32_t> members; // in orbit order, starting at the smallest index
        std::uint64_t basin_size;           // states (cycle included) that end on this cycle
    };
    std::vector<Cycle> cycles;        // ordered by smallest member index
    std::uint32_t max_preperiod = 0;  // longest tail before entering a cycle
};

FunctionalGraphSummary analyze_functional_graph(std::span<const std::uint32_t> successor);

/// Number of states on cycles of a given period.
struct PeriodCount {
    std::uint64_t period;
    std::uint64_t member_count;

    friend bool operator==(const PeriodCount&, const PeriodCount&) = default;
};

struct Attractor {
    std::uint64_t period;
    std::string representative; // lexicographically least member, in state text form
    std::uint64_t basin_size;
};

struct CensusRecord {
    std::size_t n;
    Prime prime;
    std::int64_t bound;
    std::uint64_t state_count;
    std::vector<PeriodCount> cycles;   // sorted by period
    std::vector<Attractor> attractors; // sorted by period, then representative
    std::uint64_t max_preperiod;
    bool all_collapse_to_zero;
};

/// Exhausts ({Zero} ∪ {Pow(e) : -bound <= e <= bound})^n under the symbolic step.
/// Throws BudgetError when (2*bound+2)^n exceeds `cap`. `workers` = 0 picks hardware concurrency;
/// the result does not depend on it.
CensusRecord enumerate_census(std::size_t n, Prime p, std::int64_t bound,
                              std::uint64_t cap = kDefaultCensusCap, unsigned workers = 0);

/// (2*bound+2)^n. Throws BudgetError above `cap`.
std::uint64_t census_state_count(std::size_t n, std::int64_t bound, std::uint64_t cap = kDefaultCensusCap);

/// Decodes a census index (mixed radix, entry 0 least significant; digit 0 is Zero).
PState census_state(std::uint64_t index, std::size_t n, Prime p, std::int64_t bound);

struct XorCensus {
    std::size_t n;
    std::uint64_t state_count;
    std::vector<PeriodCount> cycles;
    std::vector<Attractor> attractors; // representatives as bit strings, e.g. "011"
    std::uint64_t max_preperiod;
    bool all_reach_zero;
};

inline constexpr std::size_t kMaxXorCensusLength = 24;

/// Full attractor inventory of xor_ducci over F_2^n. Throws BudgetError for n > 24.
XorCensus xor_period_census(std::size_t n);

struct ClassicalCollapseReport {
    std::size_t n;
    std::int64_t value_bound;
    std::uint64_t step_cap;
    std::uint64_t seeds_tested;
    std::uint64_t max_steps_to_zero;
    std::vector<std::int64_t> slowest_seed;             // first seed attaining the maximum
    std::vector<std::vector<std::int64_t>> violations;  // seeds still nonzero at the step cap
};

/// Runs the classical map on every seed in [0, value_bound]^n.
/// Throws std::invalid_argument unless n is a power of two and value_bound >= 1.
ClassicalCollapseReport classical_collapse_check(std::size_t n, std::int64_t value_bound,
                                                 std::uint64_t step_cap = 10'000,
                                                 std::uint64_t cap = kDefaultCensusCap);

} // namespace ducci
