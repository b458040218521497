#include "ladist/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace ladist {

namespace {

long long checkedNarrow(__int128 v, const char* ctx) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw internal_error(std::string("rational overflow in ") + ctx);
    return static_cast<long long>(v);
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw argument_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw argument_error("bad rational literal: " + text);
    }
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    // reduce in 128 bits before narrowing
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational(checkedNarrow(n, "add"), checkedNarrow(d, "add"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    long long g1 = std::gcd(std::llabs(num_), o.den_);
    long long g2 = std::gcd(std::llabs(o.num_), den_);
    __int128 n = (__int128)(num_ / g1) * (o.num_ / g2);
    __int128 d = (__int128)(den_ / g2) * (o.den_ / g1);
    return Rational(checkedNarrow(n, "mul"), checkedNarrow(d, "mul"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw argument_error("rational division by zero");
    return *this * o.inverse();
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = (__int128)num_ * o.den_;
    __int128 rhs = (__int128)o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0) throw argument_error("inverse of zero rational");
    return Rational(den_, num_);
}

bool Rational::trySqrt(Rational& out) const {
    if (num_ < 0) return false;
    auto isqrt = [](long long v, long long& r) {
        long long s = (long long)std::llround(std::sqrt((double)v));
        for (long long c = s - 2; c <= s + 2; ++c)
            if (c >= 0 && c * c == v) { r = c; return true; }
        return false;
    };
    long long rn, rd;
    if (!isqrt(num_, rn) || !isqrt(den_, rd)) return false;
    out = Rational(rn, rd);
    return true;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace ladist
