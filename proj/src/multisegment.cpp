#include "ladist/multisegment.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ladist/errors.hpp"

namespace ladist {

Multisegment::Multisegment(std::vector<Segment> segs) : segments(std::move(segs)) {
    if (segments.empty()) throw argument_error("multisegment must be non-empty");
    for (const Segment& s : segments)
        if (!(s.line == segments.front().line))
            throw argument_error("multisegment segments must share one cuspidal line");
}

Multisegment Multisegment::etaTwisted() const {
    std::vector<Segment> out;
    for (const Segment& s : segments)
        out.push_back(Segment(s.line.etaTwisted(), s.a, s.b));
    return Multisegment(std::move(out));
}

Multisegment Multisegment::conjugateDual(const CuspidalRegistry& reg) const {
    std::vector<Segment> out;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
        out.push_back(segmentDual(reg, *it));
    return Multisegment(std::move(out));
}

LadderClass classifyMultisegment(const Multisegment& ms) {
    LadderClass c;
    auto strictlyDecreasing = [](const std::vector<Segment>& v) {
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (!(v[i].a > v[i + 1].a && v[i].b > v[i + 1].b)) return false;
        return true;
    };
    c.isLadder = strictlyDecreasing(ms.segments);
    std::vector<Segment> rev(ms.segments.rbegin(), ms.segments.rend());
    c.isAntiLadder = strictlyDecreasing(rev);
    if (c.isLadder) {
        c.isProper = true;
        for (size_t i = 0; i + 1 < ms.size(); ++i)
            if (!relate(ms[i + 1], ms[i]).precedes) { c.isProper = false; break; }
    }
    return c;
}

Multisegment speh(const Segment& delta, int k) {
    if (k < 1) throw argument_error("speh block length must be positive");
    std::vector<Segment> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(delta.shifted(Rational(k + 1, 2) - Rational(i)));
    return Multisegment(std::move(out));
}

std::vector<Multisegment> substandardKernels(const Multisegment& ms) {
    LadderClass c = classifyMultisegment(ms);
    if (!c.isProper || ms.size() < 2)
        throw argument_error("sub-standard kernels require a proper ladder with t >= 2");
    std::vector<Multisegment> out;
    for (size_t i = 0; i + 1 < ms.size(); ++i) {
        std::vector<Segment> segs;
        for (size_t j = 0; j < i; ++j) segs.push_back(ms[j]);
        MergeResult m = merge(ms[i], ms[i + 1]);
        segs.push_back(*m.unionSeg);
        if (m.intersection) segs.push_back(*m.intersection);
        for (size_t j = i + 2; j < ms.size(); ++j) segs.push_back(ms[j]);
        out.push_back(Multisegment(std::move(segs)));
    }
    return out;
}

std::vector<std::vector<size_t>> decomposeUnlinked(const std::vector<Multisegment>& parts) {
    size_t n = parts.size();
    std::vector<size_t> root(n);
    for (size_t i = 0; i < n; ++i) root[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (root[x] != x) { root[x] = root[root[x]]; x = root[x]; }
        return x;
    };
    auto linkedParts = [](const Multisegment& p, const Multisegment& q) {
        for (const Segment& s : p.segments)
            for (const Segment& t : q.segments)
                if (relate(s, t).linked) return true;
        return false;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (find(i) != find(j) && linkedParts(parts[i], parts[j]))
                root[find(i)] = find(j);
    std::vector<std::vector<size_t>> groups;
    std::map<size_t, size_t> groupOf;
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        auto it = groupOf.find(r);
        if (it == groupOf.end()) {
            groupOf[r] = groups.size();
            groups.push_back({i});
        } else {
            groups[it->second].push_back(i);
        }
    }
    return groups;
}

UnitaryFactor::UnitaryFactor(Kind kind_, Segment delta_, int k_, Rational alpha_)
    : kind(kind_), delta(std::move(delta_)), k(k_), alpha(alpha_) {
    if (k < 1) throw argument_error("unitary factor needs k >= 1");
    if (kind == Kind::ComplementaryPair) {
        if (!(Rational(0) < alpha && alpha < Rational(1, 2)))
            throw argument_error("complementary pair parameter must lie in (0, 1/2)");
    } else if (!alpha.isZero()) {
        throw argument_error("Speh factor carries no pair parameter");
    }
}

UnitaryFactor UnitaryFactor::conjugateDual(const CuspidalRegistry& reg) const {
    // alpha is kept: the pair {nu^{-la} u, nu^{la} u} is unordered
    return UnitaryFactor(kind, segmentDual(reg, delta), k, alpha);
}

} // namespace ladist
