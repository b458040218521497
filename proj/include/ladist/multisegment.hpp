#pragma once

#include <vector>

#include "ladist/segment.hpp"

namespace ladist {

/// Ordered list of segments on one cuspidal line.
struct Multisegment {
    std::vector<Segment> segments;

    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    size_t size() const { return segments.size(); }
    const Segment& operator[](size_t i) const { return segments[i]; }

    Multisegment etaTwisted() const;
    /// Conjugate-dual multisegment: each segment dualized, order reversed.
    Multisegment conjugateDual(const CuspidalRegistry& reg) const;

    bool operator==(const Multisegment& o) const { return segments == o.segments; }
};

struct LadderClass {
    bool isLadder = false;
    bool isAntiLadder = false;
    bool isProper = false;
};

/// Ladder / anti-ladder / proper-ladder classification.
LadderClass classifyMultisegment(const Multisegment& ms);

/// The Speh multisegment u(delta,k): k copies of delta, the i-th shifted by
/// (k+1)/2 - i, listed as a proper ladder.
Multisegment speh(const Segment& delta, int k);

/// The t-1 kernels of the intertwining operator onto the ladder quotient:
/// the i-th replaces (Delta_i, Delta_{i+1}) by their union followed by their
/// intersection, the intersection being dropped in the juxtaposed case.
/// Requires a proper ladder with at least two rungs.
std::vector<Multisegment> substandardKernels(const Multisegment& ms);

/// Partition of the input into maximal groups such that no segment of one
/// group is linked with a segment of another; input order is preserved
/// within and across groups.  Returns groups of input indices.
std::vector<std::vector<size_t>> decomposeUnlinked(const std::vector<Multisegment>& parts);

/// A factor of a unitary representation in Tadic form: a Speh block u(delta,k)
/// or a complementary-series pair nu^{-l a} u(delta,k) x nu^{l a} u(delta,k)
/// with 0 < a < 1/2.
struct UnitaryFactor {
    enum class Kind { Speh, ComplementaryPair };
    Kind kind = Kind::Speh;
    Segment delta;
    int k = 1;
    Rational alpha; // ComplementaryPair only

    UnitaryFactor() = default;
    UnitaryFactor(Kind kind_, Segment delta_, int k_, Rational alpha_ = Rational(0));

    UnitaryFactor conjugateDual(const CuspidalRegistry& reg) const;
    bool operator==(const UnitaryFactor& o) const {
        return kind == o.kind && delta == o.delta && k == o.k && alpha == o.alpha;
    }
};

} // namespace ladist
