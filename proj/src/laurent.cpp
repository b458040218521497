#include "ladist/laurent.hpp"

#include <sstream>

namespace ladist {

Monomial monoMul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        int ne = (r.count(v) ? r[v] : 0) + e;
        if (ne == 0) r.erase(v); else r[v] = ne;
    }
    return r;
}

Monomial monoPow(const Monomial& a, int e) {
    Monomial r;
    if (e == 0) return r;
    for (const auto& [v, x] : a) r[v] = x * e;
    return r;
}

Monomial monoInverse(const Monomial& a) { return monoPow(a, -1); }

bool monoIsEven(const Monomial& a) {
    for (const auto& [v, e] : a)
        if (e % 2 != 0) return false;
    return true;
}

Monomial monoSqrt(const Monomial& a) {
    Monomial r;
    for (const auto& [v, e] : a) r[v] = e / 2;
    return r;
}

std::string monoStr(const Monomial& a) {
    if (a.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : a) {
        if (!first) os << "*";
        first = false;
        os << v;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Laurent Laurent::term(const Rational& c, const Monomial& m) {
    Laurent r;
    if (!c.isZero()) r.terms_[m] = c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.isZero()) r.terms_.erase(it);
        }
    }
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o.scaled(Rational(-1)); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = monoMul(m1, m2);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = c1 * c2;
                if (!c.isZero()) r.terms_[m] = c;
            } else {
                it->second += c1 * c2;
                if (it->second.isZero()) r.terms_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r;
    if (c.isZero()) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

Laurent Laurent::shifted(const Monomial& m) const {
    Laurent r;
    for (const auto& [mm, c] : terms_) r.terms_[monoMul(mm, m)] = c;
    return r;
}

bool Laurent::operator<(const Laurent& o) const {
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return jt != o.terms_.end();
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < Rational(0)) { os << "-"; a = -a; }
        } else {
            os << (a < Rational(0) ? " - " : " + ");
            if (a < Rational(0)) a = -a;
        }
        first = false;
        if (m.empty()) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << monoStr(m);
        }
    }
    return os.str();
}

} // namespace ladist
