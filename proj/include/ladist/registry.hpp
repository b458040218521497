#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladist/rational.hpp"

namespace ladist {

/// Conjugate-duality class of a cuspidal representation: it is distinguished,
/// eta-distinguished (the two are mutually exclusive), or not conjugate
/// self-dual at all, in which case a dual partner is registered.
enum class Duality { Distinguished, EtaDistinguished, NotConjSelfDual };

std::string dualityName(Duality d);
Duality dualityFromName(const std::string& name);

/// An abstract unitary cuspidal representation, identified by a symbol.
/// degree is the size of the group carrying it, l its Steinberg depth under
/// the Jacquet-Langlands transfer (always odd here).
struct CuspidalDatum {
    std::string id;
    int degree = 1;
    int l = 1;
    Duality duality = Duality::Distinguished;
    std::optional<std::string> dualPartner;
};

/// nu^exponent eta^etaPow rho, with the exponent in un-scaled segment
/// coordinates and etaPow reduced mod 2.
struct TwistedCuspidal {
    std::string base;
    Rational exponent;
    int etaPow = 0;

    TwistedCuspidal() = default;
    TwistedCuspidal(std::string base_, Rational exp_, int eta)
        : base(std::move(base_)), exponent(exp_), etaPow(((eta % 2) + 2) % 2) {}

    TwistedCuspidal etaTwisted(int m = 1) const { return {base, exponent, etaPow + m}; }

    bool operator==(const TwistedCuspidal& o) const {
        return base == o.base && exponent == o.exponent && etaPow == o.etaPow;
    }
    bool operator<(const TwistedCuspidal& o) const {
        if (base != o.base) return base < o.base;
        if (exponent != o.exponent) return exponent < o.exponent;
        return etaPow < o.etaPow;
    }
};

/// Immutable table of cuspidal data.  All operations are pure lookups, so a
/// registry can be shared freely across threads once built.
class CuspidalRegistry {
public:
    CuspidalRegistry() = default;
    explicit CuspidalRegistry(std::vector<CuspidalDatum> data);

    static CuspidalRegistry fromJsonText(const std::string& text);
    static CuspidalRegistry fromFile(const std::string& path);

    const CuspidalDatum& at(const std::string& id) const;
    bool has(const std::string& id) const { return table_.count(id) != 0; }
    std::vector<std::string> ids() const;

    /// Whether eta^m (eta^etaPow nu^exponent rho) is distinguished.  False for
    /// any nonzero exponent and for non conjugate self-dual lines; otherwise
    /// decided by the duality class and the parity of m + etaPow.
    bool chiDistinguished(const TwistedCuspidal& c, int m) const;

    /// (rho^theta)^vee of a twisted cuspidal: partner-or-self base, negated
    /// exponent, same eta power.  Involutive.
    TwistedCuspidal conjugateDual(const TwistedCuspidal& c) const;

    bool isConjSelfDualLine(const TwistedCuspidal& c) const;

private:
    std::map<std::string, CuspidalDatum> table_;
};

} // namespace ladist
