#include "ladist/segment.hpp"

#include "ladist/errors.hpp"

namespace ladist {

Segment::Segment(TwistedCuspidal line_, Rational a_, Rational b_)
    : line(std::move(line_)), a(a_), b(b_) {
    if (!line.exponent.isZero())
        throw argument_error("segment line must carry no nu-twist; fold it into the endpoints");
    Rational len = b - a;
    if (!len.isInteger() || len < Rational(0))
        throw argument_error("segment endpoints must satisfy b - a in {0, 1, 2, ...}");
}

Segment Segment::steinberg(TwistedCuspidal line, int k, Rational center) {
    if (k < 1) throw argument_error("Steinberg length must be positive");
    Rational half = Rational(k - 1, 2);
    return Segment(std::move(line), center - half, center + half);
}

long long Segment::length() const { return (b - a).num() + 1; }

long long Segment::realizedDegree(const CuspidalRegistry& reg) const {
    return length() * reg.at(line.base).degree;
}

Rational Segment::realizedCenter(const CuspidalRegistry& reg) const {
    return Rational(reg.at(line.base).l) * center();
}

bool Segment::operator<(const Segment& o) const {
    if (!(line == o.line)) return line < o.line;
    if (a != o.a) return a < o.a;
    return b < o.b;
}

SegmentRelation relate(const Segment& d, const Segment& d2) {
    SegmentRelation r;
    if (!(d.line == d2.line)) return r;
    if (!(d2.b - d.b).isInteger()) return r;
    // d precedes d2: a <= a2 - 1 <= b <= b2 - 1
    auto precedes = [](const Segment& x, const Segment& y) {
        return x.a <= y.a - Rational(1) && y.a - Rational(1) <= x.b && x.b <= y.b - Rational(1);
    };
    r.precedes = precedes(d, d2);
    r.precededBy = precedes(d2, d);
    r.linked = r.precedes || r.precededBy;
    if (r.linked) {
        if (r.precedes) r.juxtaposed = (d2.a == d.b + Rational(1));
        else r.juxtaposed = (d.a == d2.b + Rational(1));
    }
    return r;
}

MergeResult merge(const Segment& d, const Segment& d2) {
    MergeResult out;
    SegmentRelation r = relate(d, d2);
    if (!r.linked) return out;
    Rational lo = std::min(d.a, d2.a), hi = std::max(d.b, d2.b);
    out.unionSeg = Segment(d.line, lo, hi);
    Rational ilo = std::max(d.a, d2.a), ihi = std::min(d.b, d2.b);
    if (ilo <= ihi) out.intersection = Segment(d.line, ilo, ihi);
    return out;
}

Segment segmentDual(const CuspidalRegistry& reg, const Segment& d) {
    TwistedCuspidal dualLine = reg.conjugateDual(d.line);
    return Segment(dualLine, -d.b, -d.a);
}

std::optional<std::vector<Segment>> jacquetDiscrete(const CuspidalRegistry& reg, const Segment& d,
                                                    const std::vector<long long>& partition) {
    long long deg = reg.at(d.line.base).degree;
    long long total = 0;
    for (long long p : partition) {
        if (p <= 0) throw argument_error("jacquet partition parts must be positive");
        total += p;
    }
    if (total != d.realizedDegree(reg))
        throw argument_error("jacquet partition does not sum to the realized degree");
    for (long long p : partition)
        if (p % deg != 0) return std::nullopt;
    std::vector<Segment> out;
    Rational top = d.b;
    for (long long p : partition) {
        Rational len(p / deg);
        out.push_back(Segment(d.line, top - len + Rational(1), top));
        top = top - len;
    }
    return out;
}

} // namespace ladist
