#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ducci {

using BigInt = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is always 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    /// Throws std::domain_error when `den` is zero.
    Rational(BigInt num, BigInt den);

    /// Accepts an optional sign, digits, and an optional `/digits` part.
    /// No whitespace. Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    std::string to_string() const;

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

Rational pow(const Rational& base, std::int64_t exponent);

} // namespace ducci
