#pragma once

#include <optional>
#include <vector>

#include "ladist/registry.hpp"

namespace ladist {

/// Cuspidal segment [a,b] on a twisted cuspidal line.  Endpoints are stored
/// un-scaled; realized exponents are l*a, ..., l*b with l the line's Steinberg
/// depth, and that scaling is applied only where realized data is needed.
struct Segment {
    TwistedCuspidal line; // exponent must be 0, eta power allowed
    Rational a;
    Rational b;

    Segment() = default;
    Segment(TwistedCuspidal line_, Rational a_, Rational b_);

    /// Centered Steinberg segment of k cuspidal points, optionally recentered.
    static Segment steinberg(TwistedCuspidal line, int k, Rational center = Rational(0));

    long long length() const; // number of cuspidal points, b - a + 1
    Rational center() const { return (a + b) / Rational(2); }
    bool isCentered() const { return center().isZero(); }

    long long realizedDegree(const CuspidalRegistry& reg) const;
    /// Realized central twist l*(a+b)/2.
    Rational realizedCenter(const CuspidalRegistry& reg) const;

    Segment shifted(const Rational& c) const { return Segment(line, a + c, b + c); }

    bool operator==(const Segment& o) const { return line == o.line && a == o.a && b == o.b; }
    bool operator<(const Segment& o) const;
};

struct SegmentRelation {
    bool precedes = false;
    bool precededBy = false;
    bool linked = false;
    bool juxtaposed = false;
};

/// Order relations between two segments.  Different lines or a non-integral
/// endpoint offset give the all-false relation.
SegmentRelation relate(const Segment& d, const Segment& d2);

struct MergeResult {
    std::optional<Segment> unionSeg;
    std::optional<Segment> intersection;
};

/// Union / intersection of linked segments; the intersection is absent in the
/// juxtaposed case and both are absent when the segments are not linked.
MergeResult merge(const Segment& d, const Segment& d2);

/// (L(Delta)^theta)^vee as a segment: [-b,-a] on the conjugate-dual line.
Segment segmentDual(const CuspidalRegistry& reg, const Segment& d);

/// Jacquet factors of the discrete series L(Delta) along a partition of its
/// realized degree, listed highest piece first (piece j has realized degree
/// partition[j]).  Absent when the partition is not adapted to the line, i.e.
/// some part is not a multiple of the cuspidal degree.
std::optional<std::vector<Segment>> jacquetDiscrete(const CuspidalRegistry& reg, const Segment& d,
                                                    const std::vector<long long>& partition);

} // namespace ladist
