#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladist/ratfun.hpp"
#include "ladist/registry.hpp"

namespace ladist {

/// Linear form c_1 s_{v1} + ... + c_k s_{vk} + shift with exact rational
/// coefficients, used as the argument of an L-factor atom.
struct LinForm {
    std::map<std::string, Rational> coeff;
    Rational shift;

    LinForm() = default;
    explicit LinForm(Rational c) : shift(c) {}
    static LinForm var(const std::string& name, Rational c = Rational(1));

    LinForm operator+(const LinForm& o) const;
    LinForm operator-(const LinForm& o) const;
    LinForm operator+(const Rational& c) const;
    LinForm scaled(const Rational& c) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    bool operator==(const LinForm& o) const { return coeff == o.coeff && shift == o.shift; }
    bool operator<(const LinForm& o) const;
    std::string str() const;
};

enum class AtomKind { AsaiPlus, AsaiMinus, RS };

/// One L-factor symbol.  Asai atoms are canonicalized to the even kind by
/// folding the sign into the eta power of the argument; a Rankin-Selberg atom
/// carries a pair of twisted symbols, the second optionally marked as a
/// formal contragredient.
struct FactorAtom {
    AtomKind kind = AtomKind::AsaiPlus;
    TwistedCuspidal arg;
    std::optional<TwistedCuspidal> arg2;
    bool arg2Dual = false;
    LinForm sform;

    static FactorAtom asai(AtomKind kind, TwistedCuspidal arg, LinForm sform);
    static FactorAtom rankinSelberg(TwistedCuspidal a, TwistedCuspidal b, bool bDual, LinForm sform);

    bool operator==(const FactorAtom& o) const;
    bool operator<(const FactorAtom& o) const;
    std::string str() const;
};

/// Formal multiset of atoms with integer exponents; equal atoms merge and
/// exponent zero disappears, so products reduce by cancellation.
class FactorProduct {
public:
    FactorProduct() = default;

    static FactorProduct one() { return {}; }
    static FactorProduct atom(const FactorAtom& a, int exponent = 1);

    FactorProduct operator*(const FactorProduct& o) const;
    FactorProduct inverse() const;

    const std::map<FactorAtom, int>& atoms() const { return atoms_; }
    size_t size() const { return atoms_.size(); }

    bool operator==(const FactorProduct& o) const { return atoms_ == o.atoms_; }
    std::string str() const;

private:
    std::map<FactorAtom, int> atoms_;
};

/// Inductivity of the Asai factor of a Steinberg representation:
/// the product over i = 0..k-1 of L^kind(sform + i, eta^{k-1-i} rho).
FactorProduct asaiSteinbergProduct(const std::string& rho, int k, AtomKind kind,
                                   const LinForm& sform);

/// gamma^+(-s, St_k(rho))^{-1} gamma^-(s, St_k(rho))^{-1} for a conjugate
/// self-dual Steinberg, expanded through the functional equation and the
/// inductivity relation, then cancelled.  Exactly four atoms survive.
FactorProduct telescopeGammaIdentity(const std::string& rho, int k);

/// Order of the pole (positive) or zero (negative) of a factor product at a
/// rational point of its s-variables: an atom contributes its exponent when
/// its argument form vanishes there and its twisted symbol is distinguished
/// in the sense matching its kind.
int poleOrder(const CuspidalRegistry& reg, const FactorProduct& p,
              const std::map<std::string, Rational>& point);

/// Variable conventions of the concrete unramified layer.  The base field
/// variable is Y* = q_F^{-s*} (Y for the variable named s, Yk for sk), Q
/// stands for q_F^{1/2}, and the extension field variable is Y*^f with f the
/// inertia degree: 2 for the inert normalization, 1 for the split one.
/// eta(pi_F) is -1 when inert and +1 when split.
enum class Normalization { Inert, Split };

/// Even (+) or odd (-) Asai factor of the unramified principal series with
/// the given Satake symbols, as an exact rational function:
///   L^+ = prod_{i<j} 1/(1 - a_i a_j q_E^-s) * prod_k 1/(1 - a_k q_F^-s)
/// and L^- flips the sign of the diagonal factors under the inert
/// normalization.
RatFun unramifiedAsai(const std::vector<std::string>& chars, AtomKind kind, const LinForm& sform,
                      Normalization norm = Normalization::Inert);

/// Rankin-Selberg factor prod_{i,j} 1/(1 - a_i b_j q_E^-s) over the extension
/// field variable.
RatFun unramifiedRankinSelberg(const std::vector<std::string>& chars,
                               const std::vector<std::string>& chars2, const LinForm& sform,
                               Normalization norm = Normalization::Inert);

/// Tate factor 1/(1 - value * q_E^{-form}) with an explicit symbol monomial
/// value; exposed for the spherical period machinery.
RatFun tateFactorE(const Monomial& value, const LinForm& sform,
                   Normalization norm = Normalization::Inert);

/// q_F^{-form} as a monomial in the Y/Q variables; throws when the form does
/// not lie on the representable lattice (integer s-coefficients,
/// half-integral shift).
Monomial qfPower(const LinForm& sform);
Monomial qePower(const LinForm& sform, Normalization norm = Normalization::Inert);

} // namespace ladist
