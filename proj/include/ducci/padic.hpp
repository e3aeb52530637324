#pragma once

#include <compare>
#include <cstdint>
#include <optional>

#include "ducci/prime.hpp"
#include "ducci/rational.hpp"

namespace ducci {

/// A member of {0} ∪ {p^e : e ∈ Z}, kept symbolically. The prime is carried by
/// the enclosing state, not by the element.
class PElement {
public:
    static constexpr PElement zero() { return PElement(true, 0); }
    static constexpr PElement pow(std::int64_t exponent) { return PElement(false, exponent); }

    constexpr bool is_zero() const { return zero_; }
    /// Only meaningful when !is_zero().
    constexpr std::int64_t exponent() const { return exponent_; }

    friend constexpr bool operator==(PElement a, PElement b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
    }
    // Zero sorts first, then by exponent; for a fixed prime this is the order of the values.
    friend constexpr std::strong_ordering operator<=>(PElement a, PElement b) {
        if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
        return a.exponent_ <=> b.exponent_;
    }

private:
    constexpr PElement(bool zero, std::int64_t exponent) : zero_(zero), exponent_(exponent) {}

    bool zero_;
    std::int64_t exponent_;
};

inline constexpr std::int64_t kDefaultMaterializationBound = 64;

/// The p-adic valuation: x = p^v * (u/w) with p dividing neither u nor w.
/// Throws std::domain_error for x = 0.
std::int64_t ord(const Rational& x, Prime p);

/// |x|_p as a symbolic element: Zero for x = 0, otherwise Pow(-ord(x, p)).
PElement padic_norm(const Rational& x, Prime p);

/// Zero -> 0, Pow(e) -> p^e exactly. Throws ResourceError when |e| > bound.
Rational element_value(PElement el, Prime p, std::int64_t bound = kDefaultMaterializationBound);

/// Recognizes a rational of the form 0 or p^e (positive). Used to embed a seed into P.
std::optional<PElement> as_element(const Rational& x, Prime p);

} // namespace ducci
