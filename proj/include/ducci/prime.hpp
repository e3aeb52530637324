#pragma once

#include <cstdint>

namespace ducci {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A validated prime. Downstream code may assume `value()` is prime.
class Prime {
public:
    /// Throws std::invalid_argument unless `value` is prime.
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    bool is_odd() const { return value_ != 2; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    std::uint64_t value_;
};

} // namespace ducci
