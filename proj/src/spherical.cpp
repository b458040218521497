#include "ladist/spherical.hpp"

#include <algorithm>

#include "ladist/distinction.hpp"
#include "ladist/errors.hpp"
#include "ladist/permutation.hpp"

namespace ladist {

namespace {

std::string svar(int k) { return "s" + std::to_string(k); }

void validateSpec(const PeriodSpec& spec) {
    if (spec.blocks.empty()) throw argument_error("period spec needs at least one block");
    for (const auto& b : spec.blocks)
        if (b.empty()) throw argument_error("period spec blocks must be non-empty");
}

/// L(form,etc) / L(form + 1, etc) for one character pair over the extension.
RatFun gkRatio(const Monomial& value, const LinForm& form, Normalization norm) {
    return tateFactorE(value, form, norm) * tateFactorE(value, form + Rational(1), norm).inverse();
}

RatFun rankOneAsaiRatio(const std::vector<std::string>& chars, const LinForm& s,
                        Normalization norm) {
    LinForm twoS = s.scaled(Rational(2));
    return unramifiedAsai(chars, AtomKind::AsaiPlus, twoS, norm) *
           unramifiedAsai(chars, AtomKind::AsaiMinus, twoS + Rational(1), norm).inverse();
}

} // namespace

RatFun sphericalPeriodClosed(const PeriodSpec& spec, Normalization norm) {
    validateSpec(spec);
    int r = spec.r();
    RatFun out;
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            LinForm diff = LinForm::var(svar(i)) - LinForm::var(svar(j));
            LinForm sum = LinForm::var(svar(i)) + LinForm::var(svar(j));
            for (const std::string& cj : spec.blocks[j - 1])
                for (const std::string& ci : spec.blocks[i - 1]) {
                    Monomial v = monoMul(Monomial{{cj, -1}}, Monomial{{ci, 1}});
                    out *= gkRatio(v, diff, norm); // L(s_i - s_j, sigma_j^vee, sigma_i) ratio
                }
            for (const std::string& ci : spec.blocks[i - 1])
                for (const std::string& cj : spec.blocks[j - 1]) {
                    Monomial v = monoMul(Monomial{{ci, 1}}, Monomial{{cj, 1}});
                    out *= gkRatio(v, sum, norm); // L(s_i + s_j, sigma_i, sigma_j) ratio
                }
        }
    }
    for (int k = 1; k <= r; ++k)
        out *= rankOneAsaiRatio(spec.blocks[k - 1], LinForm::var(svar(k)), norm);
    return out;
}

namespace {

struct Slot {
    Monomial value; // character symbol monomial, exponents +-1
    LinForm form;
};

struct Walker {
    std::vector<Slot> slots;
    Permutation xi;
    Normalization norm;
    RatFun acc;

    // One elementary reflection at positions (p-1, p), 1-indexed.  The
    // admissibility of the current involution is a theorem, not an input, so
    // a violation is an internal inconsistency.
    void reflect(int p) {
        if (!admissibleRoot(xi, p))
            throw internal_error("inadmissible reflection at position " + std::to_string(p));
        const Slot& u = slots[p - 2];
        const Slot& v = slots[p - 1];
        acc *= gkRatio(monoMul(u.value, monoInverse(v.value)), u.form - v.form, norm);
        Permutation s = Permutation::transposition(xi.n(), p - 1);
        xi = s.compose(xi).compose(s);
        std::swap(slots[p - 2], slots[p - 1]);
    }

    // Swap adjacent slot blocks [X (x slots), Y (y slots)] starting after
    // offset o, along the reduced word of the interval-exchange lemmas.
    void blockSwap(int o, int x, int y) {
        for (int i = 1; i <= y; ++i)
            for (int j = o + i + x; j >= o + i + 1; --j)
                reflect(j);
    }
};

RatFun recurseSpherical(Walker& w, const std::vector<int>& sizes, Normalization norm);

// Split the walker state into the leading 2*n1 slots (rank-one base case)
// and the rest, after checking the involution is block-diagonal.
RatFun splitOffLeadingPair(Walker& w, const std::vector<int>& sizes, Normalization norm) {
    int n1 = sizes.front();
    int head = 2 * n1;
    int n = w.xi.n();
    for (int i = 1; i <= n; ++i) {
        bool inHead = i <= head;
        if ((w.xi(i) <= head) != inHead)
            throw internal_error("involution is not block-diagonal at the parabolic split");
    }
    // base case: leading block against its mirrored dual
    std::vector<std::string> chars;
    LinForm form = w.slots[0].form;
    for (int i = 0; i < n1; ++i) {
        const Monomial& v = w.slots[i].value;
        if (v.size() != 1 || v.begin()->second != 1 || !(w.slots[i].form == form))
            throw internal_error("leading block lost its plain character form");
        chars.push_back(v.begin()->first);
    }
    RatFun base = rankOneAsaiRatio(chars, form, norm);
    if (sizes.size() == 1) return base;

    Walker tail;
    tail.norm = norm;
    tail.slots.assign(w.slots.begin() + head, w.slots.end());
    std::vector<int> img(n - head);
    for (int i = head + 1; i <= n; ++i) img[i - head - 1] = w.xi(i) - head;
    tail.xi = Permutation(std::move(img));
    std::vector<int> rest(sizes.begin() + 1, sizes.end());
    return base * recurseSpherical(tail, rest, norm);
}

// Returns the full period value of the walker's configuration, including the
// Gindikin-Karpelevich factors it accumulates along the way.
RatFun recurseSpherical(Walker& w, const std::vector<int>& sizes, Normalization norm) {
    int r = (int)sizes.size();
    if (r >= 2) {
        int total = 0;
        for (int v : sizes) total += v;
        int n1 = sizes[0];
        // beta_i: exchange B_{i+1} with B_1 inside the mirrored half
        for (int i = 1; i <= r - 1; ++i) {
            int offset = total;
            for (int k = r; k >= i + 2; --k) offset += sizes[k - 1];
            w.blockSwap(offset, sizes[i], n1);
        }
        // beta'_j: walk B_1 leftwards across A_{j+1}
        for (int j = r - 1; j >= 1; --j) {
            int offset = 0;
            for (int k = 1; k <= j; ++k) offset += sizes[k - 1];
            w.blockSwap(offset, sizes[j], n1);
        }
    }
    return w.acc * splitOffLeadingPair(w, sizes, norm);
}

} // namespace

RatFun sphericalPeriodRecursive(const PeriodSpec& spec, int maxR, Normalization norm) {
    validateSpec(spec);
    int r = spec.r();
    if (r > maxR) throw argument_error("recursive period bounded to r <= " + std::to_string(maxR));

    std::vector<int> sizes;
    for (const auto& b : spec.blocks) sizes.push_back((int)b.size());

    Walker w;
    w.norm = norm;
    for (int k = 1; k <= r; ++k)
        for (const std::string& c : spec.blocks[k - 1])
            w.slots.push_back({Monomial{{c, 1}}, LinForm::var(svar(k))});
    for (int k = r; k >= 1; --k)
        for (const std::string& c : spec.blocks[k - 1])
            w.slots.push_back({Monomial{{c, -1}}, LinForm::var(svar(k)).scaled(Rational(-1))});

    std::vector<int> fullSizes = sizes;
    for (int k = r; k >= 1; --k) fullSizes.push_back(sizes[k - 1]);
    w.xi = embedBlockwise(Permutation::longest(2 * r), fullSizes);

    return recurseSpherical(w, sizes, norm);
}

FactorProduct alphaFactor(const std::string& rho, int k, int l) {
    if (k < 1 || l < 1) throw argument_error("alpha factor needs positive k and l");
    int kl = k * l;
    LinForm twoS = LinForm::var("s", Rational(2));
    LinForm minusTwoS = twoS.scaled(Rational(-1));
    FactorProduct p = asaiSteinbergProduct(rho, kl, AtomKind::AsaiPlus, minusTwoS);
    p = p * asaiSteinbergProduct(rho, kl, AtomKind::AsaiPlus, twoS + Rational(1)).inverse();
    p = p * asaiSteinbergProduct(rho, kl, AtomKind::AsaiMinus, twoS);
    p = p * asaiSteinbergProduct(rho, kl, AtomKind::AsaiMinus, minusTwoS + Rational(1)).inverse();
    return p;
}

IntertwiningPoleReport intertwiningPole(const CuspidalRegistry& reg, const Segment& dr,
                                        const Segment& dr1) {
    if (!(dr.line == dr1.line))
        throw argument_error("intertwining pole needs both segments on one cuspidal line");
    long long l = reg.at(dr.line.base).l;
    Rational sr = dr.realizedCenter(reg);
    Rational sr1 = dr1.realizedCenter(reg);
    long long gap = std::llabs(dr.length() - dr1.length());
    IntertwiningPoleReport rep;
    if (sr > sr1) {
        rep.convergentHolomorphic = true;
        return rep;
    }
    if (sr - sr1 < Rational(-l * gap, 2)) {
        SegmentRelation rel = relate(dr, dr1);
        rep.pole = rel.precedes && !rel.juxtaposed;
        rep.simple = rep.pole;
        return rep;
    }
    throw range_error("parameters fall in the uncovered band -l|k1-k2|/2 <= s_r - s_{r+1} <= 0");
}

PeriodPoleReport periodPoleAtMinusSr(const CuspidalRegistry& reg, const Multisegment& ms) {
    LadderClass c = classifyMultisegment(ms);
    if (!c.isProper || ms.size() % 2 != 0)
        throw argument_error("period pole predicate needs a proper ladder with even length");
    for (size_t i = 0; i < ms.size(); ++i)
        if (!(ms[ms.size() - 1 - i] == segmentDual(reg, ms[i])))
            throw argument_error("period pole predicate needs conjugate self-dual data");
    size_t r = ms.size() / 2;
    const Segment& mid = ms[r - 1];
    const Segment& mid2 = ms[r];
    SegmentRelation rel = relate(mid2, mid);
    PeriodPoleReport rep;
    if (rel.juxtaposed) {
        rep.pole = false;
        rep.reason = "middle pair juxtaposed: holomorphic at -s_r";
        return rep;
    }
    MergeResult m = merge(mid, mid2);
    if (discreteSeriesDistinction(reg, *m.intersection).status == Status::Distinguished) {
        rep.pole = true;
        rep.reason = "middle intersection distinguished: pole at -s_r";
    } else {
        rep.pole = false;
        rep.reason = "not covered by sufficiency: intersection not distinguished, holomorphic";
    }
    return rep;
}

} // namespace ladist
