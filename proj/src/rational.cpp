#include "ducci/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ducci {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num_text = body;
    std::string_view den_text;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
        if (!all_digits(den_text))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (!all_digits(num_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    BigInt num(std::string(num_text), 10);
    BigInt den = den_text.empty() ? BigInt(1) : BigInt(std::string(den_text), 10);
    if (sgn(den) == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = ::abs(r.num_);
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("zero to a negative power");
        // -(INT64_MIN) is not representable; no caller gets near it.
        return Rational(1) / pow(base, -exponent);
    }
    BigInt num, den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return Rational(std::move(num), std::move(den));
}

} // namespace ducci
