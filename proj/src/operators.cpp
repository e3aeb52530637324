#include "ducci/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "ducci/errors.hpp"

namespace ducci {

std::int64_t checked_neg(std::int64_t v) {
    std::int64_t out;
    if (__builtin_sub_overflow(std::int64_t{0}, v, &out)) throw OverflowError("exponent overflow");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("exponent overflow");
    return out;
}

PElement ultrametric_difference(PElement x, PElement y) {
    if (x == y) return PElement::zero();
    if (x.is_zero()) return PElement::pow(checked_neg(y.exponent()));
    if (y.is_zero()) return PElement::pow(checked_neg(x.exponent()));
    return PElement::pow(checked_neg(std::min(x.exponent(), y.exponent())));
}

PState ducci_p_seed_step(const RationalState& state) {
    if (state.entries.empty()) throw std::invalid_argument("ducci_p_seed_step: empty state");
    const std::size_t n = state.size();
    PState out{{}, state.prime};
    out.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.entries.push_back(padic_norm(state.entries[i] - state.entries[(i + 1) % n], state.prime));
    return out;
}

PState ducci_p_symbolic_step(const PState& state) {
    const std::size_t n = state.size();
    PState out{{}, state.prime};
    out.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.entries.push_back(ultrametric_difference(state.entries[i], state.entries[(i + 1) % n]));
    return out;
}

RationalState scale_seed(const Rational& a, const RationalState& state) {
    RationalState out{{}, state.prime};
    out.entries.reserve(state.size());
    for (const Rational& x : state.entries) out.entries.push_back(a * x);
    return out;
}

PState shift_state(std::int64_t v, const PState& state) {
    PState out{{}, state.prime};
    out.entries.reserve(state.size());
    for (PElement el : state.entries)
        out.entries.push_back(el.is_zero() ? el : PElement::pow(checked_sub(el.exponent(), v)));
    return out;
}

BitState project_mod2(const PState& state) {
    BitState out;
    out.bits.reserve(state.size());
    for (PElement el : state.entries) out.bits.push_back(el.is_zero() ? 0 : 1);
    return out;
}

BitState xor_ducci(const BitState& bits) {
    const std::size_t n = bits.size();
    BitState out;
    out.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.bits[i] = bits.bits[i] ^ bits.bits[(i + 1) % n];
    return out;
}

} // namespace ducci
