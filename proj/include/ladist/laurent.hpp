#pragma once

#include <map>
#include <string>
#include <vector>

#include "ladist/rational.hpp"

namespace ladist {

/// Monomial in named variables with integer (possibly negative) exponents.
/// The empty map is the monomial 1; zero exponents are never stored.
using Monomial = std::map<std::string, int>;

Monomial monoMul(const Monomial& a, const Monomial& b);
Monomial monoPow(const Monomial& a, int e);
Monomial monoInverse(const Monomial& a);
bool monoIsEven(const Monomial& a);
Monomial monoSqrt(const Monomial& a); // requires monoIsEven
std::string monoStr(const Monomial& a);

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Terms are kept in a map keyed by monomial, so the representation is
/// canonical and comparisons are structural.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& c) { if (!c.isZero()) terms_[Monomial{}] = c; }
    static Laurent term(const Rational& c, const Monomial& m);
    static Laurent one() { return Laurent(Rational(1)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(const Rational& c) const;
    Laurent shifted(const Monomial& m) const; // multiply every term by m

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator<(const Laurent& o) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

} // namespace ladist
