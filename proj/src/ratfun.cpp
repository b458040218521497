#include "ladist/ratfun.hpp"

#include <sstream>

#include "ladist/errors.hpp"

namespace ladist {

namespace {

// Unit-normalize: shift every variable so its minimal exponent over the terms
// is zero, then rescale so the lexicographically smallest term has
// coefficient 1.  Associate factors normalize to the same polynomial.
struct NormalizedFactor {
    Rational unitCoef;
    Monomial unitMono;
    Laurent canon;
};

NormalizedFactor normalizeFactor(const Laurent& f) {
    if (f.isZero()) throw internal_error("zero polynomial used as a factor");
    // minimal exponent of each variable across all terms (implicitly 0 where absent)
    std::map<std::string, int> minExp;
    bool firstTerm = true;
    for (const auto& [m, c] : f.terms()) {
        for (auto& [v, e] : minExp)
            if (!m.count(v)) e = std::min(e, 0);
        for (const auto& [v, e] : m) {
            auto it = minExp.find(v);
            if (it == minExp.end())
                minExp[v] = firstTerm ? e : std::min(0, e);
            else
                it->second = std::min(it->second, e);
        }
        firstTerm = false;
    }
    Monomial shift;
    for (const auto& [v, e] : minExp)
        if (e != 0) shift[v] = -e;
    Laurent g = f.shifted(shift);
    Rational c = g.terms().begin()->second;
    NormalizedFactor out;
    out.canon = g.scaled(c.inverse());
    out.unitCoef = c;
    out.unitMono = monoInverse(shift);
    return out;
}

// Split A - d^2*B into (A' - d*B')(A' + d*B') when both monomials are even.
// Applied recursively to the minus branch; the plus branch cannot split again.
void splitInto(const Laurent& canon, int exponent, std::map<Laurent, int>& out) {
    if (canon.size() == 2) {
        auto it = canon.terms().begin();
        const Monomial& mA = it->first;
        ++it;
        const Monomial& mB = it->first;
        const Rational& cB = it->second;
        Rational root;
        if (cB < Rational(0) && monoIsEven(mA) && monoIsEven(mB) && (-cB).trySqrt(root)) {
            Monomial a = monoSqrt(mA), b = monoSqrt(mB);
            Laurent minus = Laurent::term(Rational(1), a) + Laurent::term(-root, b);
            Laurent plus = Laurent::term(Rational(1), a) + Laurent::term(root, b);
            splitInto(minus, exponent, out);
            out[plus] += exponent;
            return;
        }
    }
    out[canon] += exponent;
}

} // namespace

RatFun RatFun::constant(const Rational& c) {
    RatFun r;
    r.coef_ = c;
    return r;
}

RatFun RatFun::oneMinus(const Rational& c, const Monomial& m) {
    return fromFactor(Laurent::one() + Laurent::term(-c, m), 1);
}

RatFun RatFun::inverseOneMinus(const Rational& c, const Monomial& m) {
    return fromFactor(Laurent::one() + Laurent::term(-c, m), -1);
}

RatFun RatFun::fromFactor(const Laurent& poly, int exponent) {
    RatFun r;
    r.insertFactor(poly, exponent);
    return r;
}

void RatFun::insertFactor(const Laurent& f, int exponent) {
    if (exponent == 0) return;
    if (f.size() == 1) {
        // pure monomial: a unit of the Laurent ring
        const auto& [m, c] = *f.terms().begin();
        Rational cc = c;
        Monomial mm = m;
        if (exponent < 0) { cc = cc.inverse(); mm = monoInverse(mm); }
        for (int i = 0; i < std::abs(exponent); ++i) {
            coef_ *= cc;
            mono_ = monoMul(mono_, mm);
        }
        return;
    }
    NormalizedFactor nf = normalizeFactor(f);
    Rational uc = nf.unitCoef;
    Monomial um = nf.unitMono;
    if (exponent < 0) { uc = uc.inverse(); um = monoInverse(um); }
    for (int i = 0; i < std::abs(exponent); ++i) {
        coef_ *= uc;
        mono_ = monoMul(mono_, um);
    }
    std::map<Laurent, int> pieces;
    splitInto(nf.canon, exponent, pieces);
    for (const auto& [p, e] : pieces) {
        factors_[p] += e;
        if (factors_[p] == 0) factors_.erase(p);
    }
}

RatFun RatFun::operator*(const RatFun& o) const {
    RatFun r = *this;
    r.coef_ *= o.coef_;
    r.mono_ = monoMul(r.mono_, o.mono_);
    for (const auto& [p, e] : o.factors_) {
        r.factors_[p] += e;
        if (r.factors_[p] == 0) r.factors_.erase(p);
    }
    return r;
}

RatFun RatFun::inverse() const {
    if (coef_.isZero()) throw argument_error("inverse of zero rational function");
    RatFun r;
    r.coef_ = coef_.inverse();
    r.mono_ = monoInverse(mono_);
    for (const auto& [p, e] : factors_) r.factors_[p] = -e;
    return r;
}

Laurent RatFun::numerator() const {
    Monomial pos, neg;
    for (const auto& [v, e] : mono_) (e > 0 ? pos : neg)[v] = e;
    Laurent n = Laurent::term(Rational(coef_.num()), pos);
    for (const auto& [p, e] : factors_)
        for (int i = 0; i < e; ++i) n = n * p;
    return n;
}

Laurent RatFun::denominator() const {
    Monomial pos, neg;
    for (const auto& [v, e] : mono_) (e > 0 ? pos : neg)[v] = e;
    Laurent d = Laurent::term(Rational(coef_.den()), monoInverse(neg));
    for (const auto& [p, e] : factors_)
        for (int i = 0; i < -e; ++i) d = d * p;
    return d;
}

bool RatFun::crossEquals(const RatFun& o) const {
    return numerator() * o.denominator() == o.numerator() * denominator();
}

std::string RatFun::str() const {
    std::ostringstream os;
    os << coef_.str();
    if (!mono_.empty()) os << " * " << monoStr(mono_);
    for (const auto& [p, e] : factors_) {
        os << " * (" << p.str() << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

} // namespace ladist
