#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ducci/padic.hpp"

namespace ducci {

/// A cyclic tuple over P. Entry n-1 is followed by entry 0.
struct PState {
    std::vector<PElement> entries;
    Prime prime;

    std::size_t size() const { return entries.size(); }
    bool is_all_zero() const;

    friend bool operator==(const PState&, const PState&) = default;
};

/// A seed tuple of exact rationals.
struct RationalState {
    std::vector<Rational> entries;
    Prime prime;

    std::size_t size() const { return entries.size(); }

    friend bool operator==(const RationalState&, const RationalState&) = default;
};

/// A tuple over F_2.
struct BitState {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }

    friend bool operator==(const BitState&, const BitState&) = default;
};

PState rotate(const PState& state, std::ptrdiff_t k);

/// The seed viewed as a member of P^n, if every entry is 0 or a positive power of p.
std::optional<PState> as_pstate(const RationalState& seed);

/// Entrywise element_value.
RationalState materialize(const PState& state, std::int64_t bound = kDefaultMaterializationBound);

// Text forms. Elements: "0" or "p^e" (e.g. "3^-1"); states: comma separated, no spaces.
std::string to_string(PElement el, Prime p);
std::string to_string(const PState& state);
std::string to_string(const RationalState& state);
std::string to_string(const BitState& state);

/// Throws std::invalid_argument on malformed text or a base other than `p`.
PElement parse_element(std::string_view text, Prime p);
PState parse_pstate(std::string_view text, Prime p);
/// Rejects an empty seed.
RationalState parse_seed(std::string_view text, Prime p);
BitState parse_bits(std::string_view text);

} // namespace ducci
