#include "ladist/lfactor.hpp"

#include <sstream>

#include "ladist/errors.hpp"

namespace ladist {

LinForm LinForm::var(const std::string& name, Rational c) {
    LinForm f;
    if (!c.isZero()) f.coeff[name] = c;
    return f;
}

LinForm LinForm::operator+(const LinForm& o) const {
    LinForm r = *this;
    r.shift += o.shift;
    for (const auto& [v, c] : o.coeff) {
        auto it = r.coeff.find(v);
        if (it == r.coeff.end()) r.coeff[v] = c;
        else {
            it->second += c;
            if (it->second.isZero()) r.coeff.erase(it);
        }
    }
    return r;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + o.scaled(Rational(-1)); }

LinForm LinForm::operator+(const Rational& c) const {
    LinForm r = *this;
    r.shift += c;
    return r;
}

LinForm LinForm::scaled(const Rational& c) const {
    LinForm r;
    r.shift = shift * c;
    if (c.isZero()) return r;
    for (const auto& [v, x] : coeff) r.coeff[v] = x * c;
    return r;
}

Rational LinForm::eval(const std::map<std::string, Rational>& point) const {
    Rational out = shift;
    for (const auto& [v, c] : coeff) {
        auto it = point.find(v);
        if (it == point.end()) throw argument_error("no value for variable " + v);
        out += c * it->second;
    }
    return out;
}

bool LinForm::operator<(const LinForm& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    return shift < o.shift;
}

std::string LinForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coeff) {
        if (c == Rational(1)) os << (first ? "" : "+") << v;
        else if (c == Rational(-1)) os << "-" << v;
        else os << (first || c < Rational(0) ? "" : "+") << c.str() << v;
        first = false;
    }
    if (first) return shift.str();
    if (!shift.isZero()) os << (shift < Rational(0) ? "" : "+") << shift.str();
    return os.str();
}

FactorAtom FactorAtom::asai(AtomKind kind, TwistedCuspidal arg, LinForm sform) {
    if (kind == AtomKind::RS) throw argument_error("asai atom with RS kind");
    if (!arg.exponent.isZero())
        throw argument_error("Asai atom argument carries its twist in the s-form");
    FactorAtom a;
    a.kind = AtomKind::AsaiPlus;
    // the odd factor of chi is the even factor of eta*chi
    a.arg = (kind == AtomKind::AsaiMinus) ? arg.etaTwisted() : arg;
    a.sform = std::move(sform);
    return a;
}

FactorAtom FactorAtom::rankinSelberg(TwistedCuspidal a, TwistedCuspidal b, bool bDual,
                                     LinForm sform) {
    FactorAtom r;
    r.kind = AtomKind::RS;
    r.arg = std::move(a);
    r.arg2 = std::move(b);
    r.arg2Dual = bDual;
    r.sform = std::move(sform);
    return r;
}

bool FactorAtom::operator==(const FactorAtom& o) const {
    return kind == o.kind && arg == o.arg && arg2 == o.arg2 && arg2Dual == o.arg2Dual &&
           sform == o.sform;
}

bool FactorAtom::operator<(const FactorAtom& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (!(arg == o.arg)) return arg < o.arg;
    if (arg2 != o.arg2) return arg2 < o.arg2;
    if (arg2Dual != o.arg2Dual) return arg2Dual < o.arg2Dual;
    return sform < o.sform;
}

std::string FactorAtom::str() const {
    std::ostringstream os;
    auto sym = [](const TwistedCuspidal& c, bool dual) {
        std::string s;
        if (c.etaPow) s += "eta*";
        s += c.base;
        if (!c.exponent.isZero()) s += "[" + c.exponent.str() + "]";
        if (dual) s += "^v";
        return s;
    };
    if (kind == AtomKind::RS)
        os << "L(" << sform.str() << "," << sym(arg, false) << "," << sym(*arg2, arg2Dual) << ")";
    else
        os << "L+(" << sform.str() << "," << sym(arg, false) << ")";
    return os.str();
}

FactorProduct FactorProduct::atom(const FactorAtom& a, int exponent) {
    FactorProduct p;
    if (exponent != 0) p.atoms_[a] = exponent;
    return p;
}

FactorProduct FactorProduct::operator*(const FactorProduct& o) const {
    FactorProduct r = *this;
    for (const auto& [a, e] : o.atoms_) {
        r.atoms_[a] += e;
        if (r.atoms_[a] == 0) r.atoms_.erase(a);
    }
    return r;
}

FactorProduct FactorProduct::inverse() const {
    FactorProduct r;
    for (const auto& [a, e] : atoms_) r.atoms_[a] = -e;
    return r;
}

std::string FactorProduct::str() const {
    if (atoms_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, e] : atoms_) {
        if (!first) os << " ";
        first = false;
        os << a.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

FactorProduct asaiSteinbergProduct(const std::string& rho, int k, AtomKind kind,
                                   const LinForm& sform) {
    if (k < 1) throw argument_error("Steinberg length must be positive");
    FactorProduct p;
    for (int i = 0; i < k; ++i) {
        TwistedCuspidal arg(rho, Rational(0), k - 1 - i);
        p = p * FactorProduct::atom(FactorAtom::asai(kind, arg, sform + Rational(i)));
    }
    return p;
}

FactorProduct telescopeGammaIdentity(const std::string& rho, int k) {
    LinForm s = LinForm::var("s");
    LinForm minusS = s.scaled(Rational(-1));
    // gamma^+(-s)^{-1} = L^+(-s, St_k) / L^+(1+s, St_k),
    // gamma^-(s)^{-1}  = L^-(s, St_k) / L^-(1-s, St_k), duals dropped by
    // conjugate self-duality; everything expands through inductivity.
    FactorProduct p = asaiSteinbergProduct(rho, k, AtomKind::AsaiPlus, minusS);
    p = p * asaiSteinbergProduct(rho, k, AtomKind::AsaiPlus, s + Rational(1)).inverse();
    p = p * asaiSteinbergProduct(rho, k, AtomKind::AsaiMinus, s);
    p = p * asaiSteinbergProduct(rho, k, AtomKind::AsaiMinus, minusS + Rational(1)).inverse();
    return p;
}

int poleOrder(const CuspidalRegistry& reg, const FactorProduct& p,
              const std::map<std::string, Rational>& point) {
    int order = 0;
    for (const auto& [a, e] : p.atoms()) {
        if (!a.sform.eval(point).isZero()) continue;
        bool pole = false;
        if (a.kind == AtomKind::RS) {
            const TwistedCuspidal& lhs = a.arg;
            const TwistedCuspidal& rhs = *a.arg2;
            pole = a.arg2Dual ? (lhs == rhs) : (lhs == reg.conjugateDual(rhs));
        } else {
            pole = reg.chiDistinguished(a.arg, 0);
        }
        if (pole) order += e;
    }
    return order;
}

Monomial qfPower(const LinForm& sform) {
    Monomial m;
    for (const auto& [v, c] : sform.coeff) {
        if (v.empty() || v[0] != 's')
            throw argument_error("unramified layer variables must be named s or s<k>");
        if (!c.isInteger())
            throw argument_error("s-coefficient " + c.str() + " is off the representable lattice");
        std::string y = "Y" + v.substr(1);
        if ((int)c.num() != 0) m[y] = (int)c.num();
    }
    if (!sform.shift.isZero()) {
        Rational qExp = sform.shift * Rational(-2); // q_F^{-shift} = Q^{-2 shift}
        if (!qExp.isInteger())
            throw argument_error("shift " + sform.shift.str() + " is off the half-integer lattice");
        if ((int)qExp.num() != 0) m["Q"] = (int)qExp.num();
    }
    return m;
}

Monomial qePower(const LinForm& sform, Normalization norm) {
    int f = (norm == Normalization::Inert) ? 2 : 1;
    return qfPower(sform.scaled(Rational(f)));
}

RatFun tateFactorE(const Monomial& value, const LinForm& sform, Normalization norm) {
    return RatFun::inverseOneMinus(Rational(1), monoMul(value, qePower(sform, norm)));
}

RatFun unramifiedAsai(const std::vector<std::string>& chars, AtomKind kind, const LinForm& sform,
                      Normalization norm) {
    if (kind == AtomKind::RS) throw argument_error("Asai factor kind must be + or -");
    RatFun out;
    Monomial ye = qePower(sform, norm);
    Monomial yf = qfPower(sform);
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = i + 1; j < chars.size(); ++j)
            out *= RatFun::inverseOneMinus(
                Rational(1), monoMul(monoMul(Monomial{{chars[i], 1}}, Monomial{{chars[j], 1}}), ye));
    bool minusSign = (kind == AtomKind::AsaiMinus) && norm == Normalization::Inert;
    for (const std::string& c : chars)
        out *= RatFun::inverseOneMinus(Rational(minusSign ? -1 : 1),
                                       monoMul(Monomial{{c, 1}}, yf));
    return out;
}

RatFun unramifiedRankinSelberg(const std::vector<std::string>& chars,
                               const std::vector<std::string>& chars2, const LinForm& sform,
                               Normalization norm) {
    RatFun out;
    Monomial ye = qePower(sform, norm);
    for (const std::string& a : chars)
        for (const std::string& b : chars2)
            out *= RatFun::inverseOneMinus(
                Rational(1), monoMul(monoMul(Monomial{{a, 1}}, Monomial{{b, 1}}), ye));
    return out;
}

} // namespace ladist
