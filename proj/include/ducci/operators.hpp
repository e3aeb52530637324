#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ducci/state.hpp"

namespace ducci {

/// Classical Ducci map (|a_1-a_2|, ..., |a_n-a_1|) for any signed integer-like type.
template <class Int>
std::vector<Int> ducci_classical(std::span<const Int> state) {
    if (state.empty()) throw std::invalid_argument("ducci_classical: empty state");
    const std::size_t n = state.size();
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int diff = state[i] - state[(i + 1) % n];
        out[i] = diff < 0 ? Int(-diff) : diff;
    }
    return out;
}

template <class Int>
std::vector<Int> ducci_classical(const std::vector<Int>& state) {
    return ducci_classical(std::span<const Int>(state));
}

/// |x - y|_p for x, y in P, by the ultrametric case split:
/// equal values cancel; otherwise the larger norm, i.e. Pow(-min exponent).
/// Throws OverflowError if the negated exponent leaves int64.
PElement ultrametric_difference(PElement x, PElement y);

/// One p-adic Ducci step on an exact rational seed.
PState ducci_p_seed_step(const RationalState& state);

/// One p-adic Ducci step on a P-valued state, computed symbolically.
PState ducci_p_symbolic_step(const PState& state);

RationalState scale_seed(const Rational& a, const RationalState& state);

/// Pow(e) -> Pow(e - v); Zero unchanged. Multiplies every value by p^-v.
PState shift_state(std::int64_t v, const PState& state);

/// Zero -> 0, Pow(e) -> 1.
BitState project_mod2(const PState& state);

/// (b_1 ^ b_2, ..., b_n ^ b_1).
BitState xor_ducci(const BitState& bits);

std::int64_t checked_neg(std::int64_t v);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);

} // namespace ducci
