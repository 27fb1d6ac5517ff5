#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bip {

/// Exact rational with 64-bit numerator and denominator. Every operation is
/// computed in 128 bits and throws std::overflow_error if the reduced result
/// does not fit; nothing is ever rounded.
class Rational
{
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const { return make(-wide(num_), den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const auto l = wide(a.num_) * b.den_;
        const auto r = wide(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using Wide = __int128;
    static Wide wide(std::int64_t v) { return static_cast<Wide>(v); }

    static Wide gcd(Wide a, Wide b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            const Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(Wide num, Wide den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const Wide g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace bip
