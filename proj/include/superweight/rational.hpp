#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <compare>

#include "superweight/errors.hpp"

namespace superweight {

// Exact rational on int64, always reduced, denominator positive.  Every
// quantity in the library is one of these; there is no floating point
// anywhere.  Magnitudes stay tiny (weight marks, binomial sums at desk
// scale), so int64 is ample.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Valid only when is_integer().
    long long as_integer() const {
        if (!is_integer()) fail("NonIntegralWeight", "expected an integer, got " + str());
        return num_;
    }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) fail("DivisionByZero", "division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts the literal grammar RATIONAL := ["-"] NAT ["/" NAT].
    static Rational parse(const std::string& text);

private:
    void reduce() {
        if (den_ == 0) fail("DivisionByZero", "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace superweight
