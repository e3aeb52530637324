#include "ducci/dynamics.hpp"

#include <limits>
#include <utility>
#include <stdexcept>

#include "ducci/errors.hpp"

namespace ducci {

std::optional<PState> Trajectory::state(std::size_t k) const {
    if (k == 0) return as_pstate(seed);
    return images.at(k - 1);
}

Trajectory trajectory(const RationalState& seed, std::size_t k) {
    Trajectory t{seed, {}};
    t.images.reserve(k);
    if (k == 0) return t;
    t.images.push_back(ducci_p_seed_step(seed));
    for (std::size_t j = 1; j < k; ++j) t.images.push_back(ducci_p_symbolic_step(t.images.back()));
    return t;
}

std::optional<PState> state_at(const RationalState& seed, std::uint64_t k) {
    if (k == 0) return as_pstate(seed);
    PState s = ducci_p_seed_step(seed);
    for (std::uint64_t j = 1; j < k; ++j) s = ducci_p_symbolic_step(s);
    return s;
}

namespace {

struct Rho {
    std::uint64_t tail;   // mu
    std::uint64_t period; // lambda
    std::uint64_t evaluations;
    PState entry;         // x_mu
};

std::uint64_t saturating_hare_limit(std::uint64_t budget) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    return budget > (max - 3) / 3 ? max : 3 * budget + 3;
}

// Brent's algorithm on x_{i+1} = step(x_i). The hare's index when the cycle is
// first seen is below 3(mu + lambda) + 2, so passing `hare_limit` proves mu + lambda > budget.
Rho brent(const PState& x0, std::uint64_t budget) {
    const std::uint64_t hare_limit = saturating_hare_limit(budget);
    std::uint64_t evaluations = 0;
    auto step = [&](const PState& s) {
        ++evaluations;
        return ducci_p_symbolic_step(s);
    };

    std::uint64_t power = 1;
    std::uint64_t lambda = 1;
    std::uint64_t hare_index = 1;
    PState tortoise = x0;
    PState hare = step(x0);
    while (tortoise != hare) {
        if (hare_index >= hare_limit) throw BudgetError("find_cycle: no repeat within max_steps");
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = step(hare);
        ++hare_index;
        ++lambda;
    }

    tortoise = x0;
    hare = x0;
    for (std::uint64_t i = 0; i < lambda; ++i) hare = step(hare);
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
    }
    if (mu + lambda > budget) throw BudgetError("find_cycle: no repeat within max_steps");
    return {mu, lambda, evaluations, std::move(tortoise)};
}

} // namespace

CycleReport find_cycle(const PState& start, std::uint64_t max_steps) {
    if (max_steps == 0) throw std::invalid_argument("find_cycle: max_steps must be positive");
    Rho rho = brent(start, max_steps);
    return {rho.tail, rho.period, std::move(rho.entry), rho.evaluations};
}

CycleReport find_cycle(const RationalState& seed, std::uint64_t max_steps) {
    if (max_steps == 0) throw std::invalid_argument("find_cycle: max_steps must be positive");
    if (seed.entries.empty()) throw std::invalid_argument("find_cycle: empty seed");
    if (auto embedded = as_pstate(seed)) return find_cycle(*embedded, max_steps);

    // A seed outside P^n never recurs: every later state lies in P^n.
    if (max_steps < 2) throw BudgetError("find_cycle: no repeat within max_steps");
    Rho rho = brent(ducci_p_seed_step(seed), max_steps - 1);
    return {rho.tail + 1, rho.period, std::move(rho.entry), rho.evaluations + 1};
}

bool replay_check(const CycleReport& report, const RationalState& seed) {
    if (report.period == 0) return false;
    const std::uint64_t r = report.preperiod;
    const std::uint64_t s = report.period;
    const Trajectory t = trajectory(seed, r + s);
    const auto at_r = t.state(r);
    if (!at_r || *at_r != report.witness) return false;
    if (t.state(r + s) != at_r) return false;
    if (r > 0 && t.state(r - 1) == t.state(r - 1 + s)) return false;
    for (std::uint64_t d = 1; d < s; ++d)
        if (t.state(r + d) == at_r) return false;
    return true;
}

namespace {

bool states_equal(const RationalState& seed, std::uint64_t a, std::uint64_t b) {
    if (a > b) std::swap(a, b);
    const auto lhs = state_at(seed, a);
    if (!lhs) return false;
    PState rhs = *lhs;
    for (std::uint64_t k = a; k < b; ++k) rhs = ducci_p_symbolic_step(rhs);
    return *lhs == rhs;
}

void check_structure_args(const CycleReport& report, std::uint64_t i, std::uint64_t h) {
    if (i >= report.period) throw std::invalid_argument("cycle_structure_check: need 0 <= i < s");
    if (h == 0) throw std::invalid_argument("cycle_structure_check: need h >= 1");
}

} // namespace

bool cycle_structure_check(const CycleReport& report, const RationalState& seed, std::uint64_t i,
                           std::uint64_t h) {
    check_structure_args(report, i, h);
    const std::uint64_t r = report.preperiod;
    return states_equal(seed, r + i, r + i + h * report.period);
}

bool cycle_structure_literal_check(const CycleReport& report, const RationalState& seed,
                                   std::uint64_t i, std::uint64_t h) {
    check_structure_args(report, i, h);
    const std::uint64_t r = report.preperiod;
    return states_equal(seed, r + i, r + report.period + i * h);
}

} // namespace ducci
