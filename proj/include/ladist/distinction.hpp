#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ladist/multisegment.hpp"

namespace ladist {

enum class Status { Distinguished, EtaDistinguished, Neither };

std::string statusName(Status s);

/// Outcome of a distinction decision: the status, the matching involution on
/// factor indices when one certifies the verdict (0-indexed images), and the
/// rules applied.
struct DistinctionVerdict {
    Status status = Status::Neither;
    std::optional<std::vector<int>> witness;
    std::vector<std::string> trace;
};

/// Whether eta^m L(Delta) is distinguished, for a discrete series segment.
/// Requires a centered segment on a conjugate self-dual line; the parity rule
/// is chi-distinction of the line with exponent l(k+1) + m.
bool discreteSeriesChiDistinguished(const CuspidalRegistry& reg, const Segment& d, int m);

/// Distinction class of the discrete series L(Delta): Neither off-center or
/// off a conjugate self-dual line, otherwise exactly one of Distinguished /
/// EtaDistinguished by the parity rule.
DistinctionVerdict discreteSeriesDistinction(const CuspidalRegistry& reg, const Segment& d);

/// Distinction of the standard module induced from the given discrete series:
/// some involution on the indices must match every factor with the conjugate
/// dual of its partner and fix only distinguished factors.  The witness is
/// the lexicographically smallest matching involution.
DistinctionVerdict standardModuleDistinguished(const CuspidalRegistry& reg,
                                               const std::vector<Segment>& deltas);

/// Distinction of a proper ladder representation: conjugate self-dual data
/// with a distinguished middle rung (odd length) or an eta-distinguished
/// middle-pair union (even length).  The eta-twisted statuses are decided by
/// rerunning on the eta-twisted ladder.
DistinctionVerdict properLadderDistinguished(const CuspidalRegistry& reg, const Multisegment& ms);

/// One factor of a unitary representation: a Tadic block or an explicit
/// proper ladder.
using ProductFactor = std::variant<UnitaryFactor, Multisegment>;

/// Distinction of a commutative product of factors: some involution must pair
/// each factor with a conjugate dual and every fixed factor must itself be
/// distinguished (a fixed complementary pair only needs to be its own
/// conjugate dual, its two halves pairing with each other).  Explicit ladder
/// factors must be mutually unlinked and unlinked from the Tadic blocks.
DistinctionVerdict unitaryDistinguished(const CuspidalRegistry& reg,
                                        const std::vector<ProductFactor>& factors);

} // namespace ladist
