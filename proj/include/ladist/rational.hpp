#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "ladist/errors.hpp"

namespace ladist {

/// Exact rational number on 64-bit components.  Always normalized:
/// gcd(num, den) = 1 and den > 0.  Intermediate products are taken in
/// 128 bits and overflow of the reduced result throws.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    static Rational parse(const std::string& text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return den_ == 1; }
    bool isHalfInteger() const { return den_ == 1 || den_ == 2; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational inverse() const;
    /// Square root when the value is a perfect square of a rational, else nullopt-like failure.
    bool trySqrt(Rational& out) const;

    std::string str() const;

private:
    long long num_;
    long long den_;
};

inline Rational operator*(long long a, const Rational& r) { return Rational(a) * r; }

} // namespace ladist
