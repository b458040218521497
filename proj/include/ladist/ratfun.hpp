#pragma once

#include <map>
#include <optional>
#include <string>

#include "ladist/laurent.hpp"

namespace ladist {

/// Exact rational function, kept as a unit (rational constant times a Laurent
/// monomial) and a multiset of canonically normalized polynomial factors with
/// integer exponents.  Everything this library builds is a product of
/// binomials 1 - c*m, so cancellation in the factor map yields the fully
/// gcd-reduced fraction; factors with even square structure are split so two
/// construction routes of the same function land on the same multiset.
class RatFun {
public:
    RatFun() : coef_(1) {}

    static RatFun one() { return RatFun(); }
    static RatFun constant(const Rational& c);
    /// 1 - c*m as a factor in the numerator.
    static RatFun oneMinus(const Rational& c, const Monomial& m);
    /// (1 - c*m)^{-1}.
    static RatFun inverseOneMinus(const Rational& c, const Monomial& m);
    static RatFun fromFactor(const Laurent& poly, int exponent);

    bool isZero() const { return coef_.isZero(); }

    RatFun operator*(const RatFun& o) const;
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun inverse() const;

    bool operator==(const RatFun& o) const {
        return coef_ == o.coef_ && mono_ == o.mono_ && factors_ == o.factors_;
    }

    const Rational& unitCoef() const { return coef_; }
    const Monomial& unitMono() const { return mono_; }
    const std::map<Laurent, int>& factors() const { return factors_; }

    /// Expanded numerator / denominator (unit folded into the numerator side).
    Laurent numerator() const;
    Laurent denominator() const;

    /// Equality by cross multiplication of the expanded fractions.  Exact but
    /// potentially expensive; used to validate the canonical comparison.
    bool crossEquals(const RatFun& o) const;

    std::string str() const;

private:
    void insertFactor(const Laurent& f, int exponent);

    Rational coef_;
    Monomial mono_;
    std::map<Laurent, int> factors_;
};

} // namespace ladist
