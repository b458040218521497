#include "ladist/distinction.hpp"

#include <algorithm>
#include <functional>

#include "ladist/errors.hpp"

namespace ladist {

std::string statusName(Status s) {
    switch (s) {
        case Status::Distinguished: return "Distinguished";
        case Status::EtaDistinguished: return "EtaDistinguished";
        case Status::Neither: return "Neither";
    }
    return "?";
}

bool discreteSeriesChiDistinguished(const CuspidalRegistry& reg, const Segment& d, int m) {
    if (!d.isCentered()) return false;
    if (!reg.isConjSelfDualLine(d.line)) return false;
    long long l = reg.at(d.line.base).l;
    long long k = d.length();
    return reg.chiDistinguished(d.line, (int)((l * (k + 1) + m) % 2));
}

DistinctionVerdict discreteSeriesDistinction(const CuspidalRegistry& reg, const Segment& d) {
    DistinctionVerdict v;
    if (!d.isCentered()) {
        v.trace.push_back("nonzero central twist");
        return v;
    }
    if (!reg.isConjSelfDualLine(d.line)) {
        v.trace.push_back("line not conjugate self-dual");
        return v;
    }
    bool odd = d.length() % 2 == 1;
    if (discreteSeriesChiDistinguished(reg, d, 0)) {
        v.status = Status::Distinguished;
        v.trace.push_back(odd ? "Steinberg odd" : "Steinberg even");
    } else {
        // centered on a conjugate self-dual line: exactly one of the two
        v.status = Status::EtaDistinguished;
        v.trace.push_back(odd ? "Steinberg odd" : "Steinberg even");
    }
    return v;
}

namespace {

// All involutions of {0,...,t-1} in lexicographic image order.
void forEachInvolution(int t, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> img(t, -1);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == t) return visit(img);
        if (img[i] != -1) return rec(i + 1);
        // smallest image first: pairing with an earlier index is impossible,
        // so the candidates in order are i itself then each j > i
        img[i] = i;
        if (!rec(i + 1)) return false;
        for (int j = i + 1; j < t; ++j) {
            if (img[j] != -1) continue;
            img[i] = j;
            img[j] = i;
            if (!rec(i + 1)) return false;
            img[j] = -1;
        }
        img[i] = -1;
        return true;
    };
    rec(0);
}

} // namespace

DistinctionVerdict standardModuleDistinguished(const CuspidalRegistry& reg,
                                               const std::vector<Segment>& deltas) {
    DistinctionVerdict v;
    int t = (int)deltas.size();
    if (t == 0) throw argument_error("standard module needs at least one factor");
    std::vector<Segment> duals;
    for (const Segment& d : deltas) duals.push_back(segmentDual(reg, d));
    std::optional<std::vector<int>> found;
    forEachInvolution(t, [&](const std::vector<int>& img) {
        for (int i = 0; i < t; ++i) {
            if (!(deltas[img[i]] == duals[i])) return true; // keep searching
            if (img[i] == i &&
                discreteSeriesDistinction(reg, deltas[i]).status != Status::Distinguished)
                return true;
        }
        found = img;
        return false; // first hit is lexicographically smallest
    });
    if (found) {
        v.status = Status::Distinguished;
        v.witness = found;
        v.trace.push_back("standard module involution");
    } else {
        v.trace.push_back("no matching involution");
    }
    return v;
}

DistinctionVerdict properLadderDistinguished(const CuspidalRegistry& reg, const Multisegment& ms) {
    if (!classifyMultisegment(ms).isProper)
        throw argument_error("ladder distinction needs a proper ladder");
    DistinctionVerdict v;
    size_t t = ms.size();
    for (size_t i = 0; i < t; ++i)
        if (!(ms[t - 1 - i] == segmentDual(reg, ms[i]))) {
            v.trace.push_back("not conjugate self-dual");
            return v;
        }
    if (t % 2 == 1) {
        const Segment& mid = ms[t / 2];
        if (discreteSeriesDistinction(reg, mid).status == Status::Distinguished) {
            v.status = Status::Distinguished;
            v.trace.push_back("odd ladder: middle rung distinguished");
        } else {
            v.trace.push_back("odd ladder: middle rung not distinguished");
        }
        return v;
    }
    size_t r = t / 2;
    MergeResult m = merge(ms[r - 1], ms[r]);
    if (!m.unionSeg) throw internal_error("proper ladder middle pair must be linked");
    if (discreteSeriesDistinction(reg, *m.unionSeg).status == Status::EtaDistinguished) {
        v.status = Status::Distinguished;
        v.trace.push_back("even ladder: middle union eta-distinguished");
    } else {
        v.trace.push_back("even ladder: middle union not eta-distinguished");
    }
    return v;
}

namespace {

ProductFactor factorConjugateDual(const CuspidalRegistry& reg, const ProductFactor& f) {
    if (std::holds_alternative<UnitaryFactor>(f))
        return std::get<UnitaryFactor>(f).conjugateDual(reg);
    return std::get<Multisegment>(f).conjugateDual(reg);
}

bool factorEquals(const ProductFactor& a, const ProductFactor& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<UnitaryFactor>(a))
        return std::get<UnitaryFactor>(a) == std::get<UnitaryFactor>(b);
    return std::get<Multisegment>(a) == std::get<Multisegment>(b);
}

// Segments realized by a factor, for the mutual-unlinkedness requirement.
Multisegment factorSegments(const ProductFactor& f) {
    if (std::holds_alternative<Multisegment>(f)) return std::get<Multisegment>(f);
    const UnitaryFactor& u = std::get<UnitaryFactor>(f);
    Multisegment base = speh(u.delta, u.k);
    if (u.kind == UnitaryFactor::Kind::Speh) return base;
    std::vector<Segment> segs;
    for (const Segment& s : base.segments) segs.push_back(s.shifted(-u.alpha));
    for (const Segment& s : base.segments) segs.push_back(s.shifted(u.alpha));
    return Multisegment(std::move(segs));
}

bool fixedFactorDistinguished(const CuspidalRegistry& reg, const ProductFactor& f) {
    if (std::holds_alternative<Multisegment>(f))
        return properLadderDistinguished(reg, std::get<Multisegment>(f)).status ==
               Status::Distinguished;
    const UnitaryFactor& u = std::get<UnitaryFactor>(f);
    if (u.kind == UnitaryFactor::Kind::ComplementaryPair) {
        // the two halves pair with each other exactly when the block is its
        // own conjugate dual; neither half is distinguished on its own
        return factorEquals(UnitaryFactor(u.kind, segmentDual(reg, u.delta), u.k, u.alpha), u);
    }
    return properLadderDistinguished(reg, speh(u.delta, u.k)).status == Status::Distinguished;
}

} // namespace

DistinctionVerdict unitaryDistinguished(const CuspidalRegistry& reg,
                                        const std::vector<ProductFactor>& factors) {
    DistinctionVerdict v;
    int t = (int)factors.size();
    if (t == 0) throw argument_error("unitary product needs at least one factor");

    for (int i = 0; i < t; ++i) {
        if (!std::holds_alternative<Multisegment>(factors[i])) continue;
        const Multisegment& mi = std::get<Multisegment>(factors[i]);
        if (!classifyMultisegment(mi).isProper)
            throw argument_error("explicit ladder factors must be proper ladders");
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            Multisegment mj = factorSegments(factors[j]);
            for (const Segment& s : mi.segments)
                for (const Segment& u : mj.segments)
                    if (relate(s, u).linked)
                        throw argument_error(
                            "explicit ladder factors must be unlinked from the other factors");
        }
    }

    std::vector<ProductFactor> duals;
    for (const ProductFactor& f : factors) duals.push_back(factorConjugateDual(reg, f));
    std::optional<std::vector<int>> found;
    forEachInvolution(t, [&](const std::vector<int>& img) {
        for (int i = 0; i < t; ++i) {
            if (!factorEquals(factors[img[i]], duals[i])) return true;
            if (img[i] == i && !fixedFactorDistinguished(reg, factors[i])) return true;
        }
        found = img;
        return false;
    });
    if (found) {
        v.status = Status::Distinguished;
        v.witness = found;
        v.trace.push_back("theta-induced");
    } else {
        v.trace.push_back("not theta-induced");
    }
    return v;
}

} // namespace ladist
