#pragma once

#include <string>
#include <vector>

#include "ladist/lfactor.hpp"
#include "ladist/multisegment.hpp"

namespace ladist {

/// Generic unramified inducing data for an open spherical period: r free
/// blocks of Satake character symbols for sigma_1, ..., sigma_r; the mirrored
/// blocks r+1, ..., 2r are the conjugate duals by construction, and the
/// variables are s1, ..., sr.
struct PeriodSpec {
    std::vector<std::vector<std::string>> blocks;

    int r() const { return (int)blocks.size(); }
};

/// Value of the open period on the normalized spherical vector, by the closed
/// product formula: Rankin-Selberg ratios over the pairs i < j in the
/// variables s_i -+ s_j, times Asai ratios L^+(2s_k)/L^-(2s_k + 1) per block.
RatFun sphericalPeriodClosed(const PeriodSpec& spec,
                             Normalization norm = Normalization::Inert);

/// The same value computed by replaying the inductive reduction: the block
/// rotation is decomposed into elementary reflections along the reduced words
/// of the two interval-exchange lemmas, one Gindikin-Karpelevich factor is
/// collected per reflection (with the admissible-root condition checked at
/// every step), the result splits off the leading block pair and recurses.
/// Shares no code path with the closed product except the rank-one base case.
RatFun sphericalPeriodRecursive(const PeriodSpec& spec, int maxR = 3,
                                Normalization norm = Normalization::Inert);

/// Proportionality constant of the period functional equation for the middle
/// block exchange, as a four-atom factor product in the variable s: the
/// telescoped gamma quotient of St_{kl} with s doubled.
FactorProduct alphaFactor(const std::string& rho, int k, int l);

struct IntertwiningPoleReport {
    bool convergentHolomorphic = false;
    bool pole = false;
    bool simple = false;
};

/// Pole behaviour of the standard intertwining operator exchanging the middle
/// pair delta_r = delta[s_r], delta_{r+1} = mu[s_{r+1}] on one cuspidal line.
/// Defined on the two parameter ranges s_r > s_{r+1} (convergent) and
/// s_r - s_{r+1} < -l|k_1-k_2|/2 (pole exactly for linked, non-juxtaposed
/// middle segments); anything in between is rejected.
IntertwiningPoleReport intertwiningPole(const CuspidalRegistry& reg, const Segment& dr,
                                        const Segment& dr1);

struct PeriodPoleReport {
    bool pole = false;
    std::string reason;
};

/// Sufficient condition for the open period of a conjugate self-dual proper
/// ladder with an even number of rungs to blow up at s = -s_r: never when the
/// middle pair is juxtaposed, always when it is not and the middle
/// intersection is distinguished.
PeriodPoleReport periodPoleAtMinusSr(const CuspidalRegistry& reg, const Multisegment& ms);

} // namespace ladist
