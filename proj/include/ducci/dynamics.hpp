#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ducci/operators.hpp"

namespace ducci {

/// alpha^(0..k): the seed followed by its k images. images[j] is alpha^(j+1).
struct Trajectory {
    RationalState seed;
    std::vector<PState> images;

    std::size_t size() const { return images.size() + 1; }
    /// alpha^(k) as a P-state; nullopt for k = 0 when the seed is not P-valued.
    std::optional<PState> state(std::size_t k) const;
};

/// Preperiod r and period s, both minimal, with alpha^(r) = alpha^(r+s).
/// The witness alpha^(r) always lies in P^n since it recurs.
struct CycleReport {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 1;
    PState witness;
    std::uint64_t steps_used = 0;
};

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

/// Seed step for index 1, symbolic steps afterwards.
Trajectory trajectory(const RationalState& seed, std::size_t k);

/// alpha^(k), computed without keeping the history.
std::optional<PState> state_at(const RationalState& seed, std::uint64_t k);

/// Brent's cycle finder, O(1) states in memory.
/// Throws BudgetError if r + s would exceed `max_steps`.
CycleReport find_cycle(const RationalState& seed, std::uint64_t max_steps = kDefaultMaxSteps);
CycleReport find_cycle(const PState& start, std::uint64_t max_steps = kDefaultMaxSteps);

/// Replays the trajectory and checks alpha^(r) = alpha^(r+s) plus minimality of r and s.
bool replay_check(const CycleReport& report, const RationalState& seed);

/// alpha^(r+i) = alpha^(r+i+h*s). Requires 0 <= i < s and h >= 1.
bool cycle_structure_check(const CycleReport& report, const RationalState& seed, std::uint64_t i,
                           std::uint64_t h);

/// The index relation written as alpha^(r+s+i*h) = alpha^(r+i). Holds only when s divides i*(h-1).
bool cycle_structure_literal_check(const CycleReport& report, const RationalState& seed,
                                   std::uint64_t i, std::uint64_t h);

} // namespace ducci
