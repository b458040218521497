#pragma once

#include "ladist/registry.hpp"
#include "ladist/segment.hpp"

namespace ladist::testing {

// rho: self-dual distinguished, mu: self-dual eta-distinguished, rho3/mu3 the
// same with degree 2 and l = 3, tau1/tau2 a non self-dual pair.
inline const CuspidalRegistry& reg() {
    static CuspidalRegistry r = CuspidalRegistry::fromJsonText(R"([
        {"id": "rho",  "degree": 1, "l": 1, "duality": "Distinguished"},
        {"id": "mu",   "degree": 1, "l": 1, "duality": "EtaDistinguished"},
        {"id": "rho3", "degree": 2, "l": 3, "duality": "Distinguished"},
        {"id": "mu3",  "degree": 2, "l": 3, "duality": "EtaDistinguished"},
        {"id": "tau1", "degree": 1, "l": 1, "duality": "NotConjSelfDual", "dualPartner": "tau2"},
        {"id": "tau2", "degree": 1, "l": 1, "duality": "NotConjSelfDual", "dualPartner": "tau1"}
    ])");
    return r;
}

inline TwistedCuspidal line(const std::string& id, int eta = 0) {
    return TwistedCuspidal(id, Rational(0), eta);
}

inline Segment seg(const std::string& id, Rational a, Rational b, int eta = 0) {
    return Segment(line(id, eta), a, b);
}

} // namespace ladist::testing
