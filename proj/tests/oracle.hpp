#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// symbolic step, Brent's finder, or mpz_remove.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ducci/rational.hpp"

namespace oracle {

using ducci::BigInt;
using ducci::Rational;

// ord_p by repeated trial division.
inline std::int64_t ord(const Rational& x, std::uint64_t p) {
    auto strip = [p](BigInt v) {
        std::int64_t k = 0;
        v = abs(v);
        const BigInt bp(static_cast<unsigned long>(p));
        while (v != 0 && v % bp == 0) {
            v /= bp;
            ++k;
        }
        return k;
    };
    return strip(x.numerator()) - strip(x.denominator());
}

// p^e by repeated multiplication.
inline Rational power(std::uint64_t p, std::int64_t e) {
    Rational r(1);
    const Rational base(BigInt(static_cast<unsigned long>(p)));
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    return e < 0 ? Rational(1) / r : r;
}

inline Rational norm(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) return Rational(0);
    return power(p, -ord(x, p));
}

// One p-adic Ducci step on plain rational values.
inline std::vector<Rational> step(const std::vector<Rational>& v, std::uint64_t p) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(norm(v[i] - v[(i + 1) % v.size()], p));
    return out;
}

struct Rho {
    std::uint64_t preperiod;
    std::uint64_t period;
};

// History-table cycle finder over rational-valued states.
inline std::optional<Rho> find_cycle(std::vector<Rational> x, std::uint64_t p, std::uint64_t max_steps) {
    std::map<std::vector<Rational>, std::uint64_t> seen;
    for (std::uint64_t k = 0; k <= max_steps; ++k) {
        auto [it, fresh] = seen.emplace(x, k);
        if (!fresh) return Rho{it->second, k - it->second};
        x = step(x, p);
    }
    return std::nullopt;
}

} // namespace oracle
