#include "ducci/padic.hpp"

#include <limits>
#include <stdexcept>

#include "ducci/errors.hpp"

namespace ducci {

namespace {

std::int64_t strip_prime(const BigInt& value, const BigInt& p) {
    BigInt rest;
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t()));
}

BigInt to_big(Prime p) {
    const std::uint64_t v = p.value();
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return b;
}

} // namespace

std::int64_t ord(const Rational& x, Prime p) {
    if (x.is_zero()) throw std::domain_error("ord_p(0) is undefined");
    const BigInt big_p = to_big(p);
    // Lowest terms: at most one of numerator and denominator is divisible by p.
    return strip_prime(x.numerator(), big_p) - strip_prime(x.denominator(), big_p);
}

PElement padic_norm(const Rational& x, Prime p) {
    if (x.is_zero()) return PElement::zero();
    const std::int64_t v = ord(x, p);
    if (v == std::numeric_limits<std::int64_t>::min()) throw OverflowError("padic_norm: exponent overflow");
    return PElement::pow(-v);
}

Rational element_value(PElement el, Prime p, std::int64_t bound) {
    if (el.is_zero()) return Rational(0);
    const std::int64_t e = el.exponent();
    if (e > bound || e < -bound)
        throw ResourceError("element_value: exponent " + std::to_string(e) + " exceeds materialization bound " +
                            std::to_string(bound));
    return pow(Rational(to_big(p)), e);
}

std::optional<PElement> as_element(const Rational& x, Prime p) {
    if (x.is_zero()) return PElement::zero();
    if (x.sign() < 0) return std::nullopt;
    const BigInt big_p = to_big(p);
    const bool integral = x.is_integer();
    if (!integral && x.numerator() != 1) return std::nullopt;
    const BigInt& power = integral ? x.numerator() : x.denominator();
    BigInt rest;
    const auto k = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), power.get_mpz_t(), big_p.get_mpz_t()));
    if (rest != 1) return std::nullopt;
    return PElement::pow(integral ? k : -k);
}

} // namespace ducci
