// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and bound is pinned here; the checks are exact, so the
// only tolerances are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ladist/cosets.hpp"
#include "ladist/distinction.hpp"
#include "ladist/lfactor.hpp"
#include "ladist/multisegment.hpp"
#include "ladist/permutation.hpp"
#include "ladist/spherical.hpp"

using namespace ladist;

namespace {

const CuspidalRegistry& reg() {
    static CuspidalRegistry r = CuspidalRegistry::fromJsonText(R"([
        {"id": "rho",  "degree": 1, "l": 1, "duality": "Distinguished"},
        {"id": "mu",   "degree": 1, "l": 1, "duality": "EtaDistinguished"},
        {"id": "rho3", "degree": 1, "l": 3, "duality": "Distinguished"},
        {"id": "mu3",  "degree": 1, "l": 3, "duality": "EtaDistinguished"},
        {"id": "tau1", "degree": 1, "l": 1, "duality": "NotConjSelfDual", "dualPartner": "tau2"},
        {"id": "tau2", "degree": 1, "l": 1, "duality": "NotConjSelfDual", "dualPartner": "tau1"}
    ])");
    return r;
}

TwistedCuspidal line(const std::string& id, int eta = 0) {
    return TwistedCuspidal(id, Rational(0), eta);
}

struct Criterion {
    int number;
    std::string label;
    double budgetSeconds;
    std::function<bool(std::string&)> run;
};

// --- suite of conjugate self-dual proper ladders (t <= 4, lengths <= 3) ----

std::vector<Multisegment> ladderSuite() {
    const auto& R = reg();
    std::vector<Multisegment> suite;
    const std::vector<std::string> lines = {"rho", "mu", "rho3", "mu3"};
    for (const std::string& id : lines) {
        // t = 2: a rung against its conjugate dual, all allowed centers
        for (int len = 1; len <= 3; ++len)
            for (int twice = 1; twice <= len; ++twice) {
                Rational c(twice, 2);
                Rational a = c - Rational(len - 1, 2);
                if (a > Rational(1, 2)) continue;
                Segment top(line(id), a, c + Rational(len - 1, 2));
                suite.push_back(Multisegment({top, segmentDual(R, top)}));
            }
        // t = 3: middle rung of length 1, flanks of lengths 1..3
        for (int len = 1; len <= 3; ++len) {
            Segment mid(line(id), Rational(0), Rational(0));
            Segment top(line(id), Rational(1), Rational(len));
            suite.push_back(Multisegment({top, mid, segmentDual(R, top)}));
        }
        // t = 4: two nested dual pairs
        Segment inner(line(id), Rational(1, 2), Rational(1, 2));
        for (Rational b : {Rational(3, 2), Rational(5, 2)}) {
            Segment outer(line(id), Rational(3, 2), b);
            suite.push_back(Multisegment(
                {outer, inner, segmentDual(R, inner), segmentDual(R, outer)}));
        }
        // t = 4 with overlapping middle pair
        Segment mid2(line(id), Rational(0), Rational(1));
        Segment out2(line(id), Rational(2), Rational(3));
        suite.push_back(Multisegment(
            {out2, mid2, segmentDual(R, mid2), segmentDual(R, out2)}));
    }
    // a couple of eta-twisted lines to keep the twist path honest
    Segment tw(line("rho", 1), Rational(1, 2), Rational(1, 2));
    suite.push_back(Multisegment({tw, segmentDual(R, tw)}));
    Segment tw3(line("mu3", 1), Rational(0), Rational(1));
    suite.push_back(Multisegment({tw3, segmentDual(R, tw3)}));
    return suite;
}

// standard-module data that is not ladder-shaped
std::vector<std::vector<Segment>> standardSuite() {
    const auto& R = reg();
    std::vector<std::vector<Segment>> suite;
    for (const std::string id : {"rho", "mu", "rho3", "mu3"}) {
        for (int k = 1; k <= 3; ++k)
            suite.push_back({Segment::steinberg(line(id), k)});
        Segment far(line(id), Rational(2), Rational(2));
        suite.push_back({far, segmentDual(R, far)});
        Segment wide(line(id), Rational(1), Rational(3));
        suite.push_back({wide, Segment::steinberg(line(id), 1), segmentDual(R, wide)});
    }
    Segment t1(line("tau1"), Rational(0), Rational(1));
    suite.push_back({t1, segmentDual(R, t1)});
    return suite;
}

bool criterion1(std::string& detail) {
    long long checked = 0;
    for (auto kind : {ReductionLemma::BB, ReductionLemma::AB})
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                LemmaReport rep = verifyReductionLemma(kind, a, b);
                if (!rep.ok || rep.lengthMu != (long long)a * b) {
                    detail = "failure at a=" + std::to_string(a) + " b=" + std::to_string(b);
                    return false;
                }
                ++checked;
            }
    detail = std::to_string(checked) + " lemma instances, zero failures";
    return true;
}

bool criterion2(std::string& detail) {
    const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
    std::vector<std::vector<std::string>> blocks;
    for (const auto& x : alphabet) {
        blocks.push_back({x});
        for (const auto& y : alphabet) blocks.push_back({x, y});
    }
    long long checked = 0;
    for (const auto& b1 : blocks) {
        PeriodSpec one{{b1}};
        if (!(sphericalPeriodClosed(one) == sphericalPeriodRecursive(one))) {
            detail = "mismatch at r=1";
            return false;
        }
        ++checked;
        for (const auto& b2 : blocks) {
            PeriodSpec two{{b1, b2}};
            if (!(sphericalPeriodClosed(two) == sphericalPeriodRecursive(two))) {
                detail = "mismatch at r=2";
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " period specs agree as reduced rational functions";
    return true;
}

bool criterion3(std::string& detail) {
    for (int k = 1; k <= 8; ++k) {
        FactorProduct p = telescopeGammaIdentity("rho", k);
        if (p.size() != 4) {
            detail = "k=" + std::to_string(k) + " left " + std::to_string(p.size()) + " atoms";
            return false;
        }
    }
    detail = "all k <= 8 cancel to exactly four atoms";
    return true;
}

bool criterion4(std::string& detail) {
    const std::vector<std::string> alphabet = {"a", "b", "c"};
    std::vector<std::vector<std::string>> tuples;
    for (const auto& x : alphabet) {
        tuples.push_back({x});
        for (const auto& y : alphabet) {
            tuples.push_back({x, y});
            for (const auto& z : alphabet) tuples.push_back({x, y, z});
        }
    }
    LinForm s = LinForm::var("s");
    for (const auto& chars : tuples) {
        RatFun lhs = unramifiedAsai(chars, AtomKind::AsaiPlus, s) *
                     unramifiedAsai(chars, AtomKind::AsaiMinus, s);
        RatFun rhs = unramifiedRankinSelberg(chars, chars, s);
        if (!(lhs == rhs)) {
            detail = "mismatch for an n=" + std::to_string(chars.size()) + " tuple";
            return false;
        }
    }
    detail = std::to_string(tuples.size()) + " principal-series tuples verified";
    return true;
}

bool criterion5(std::string& detail) {
    const auto& R = reg();
    long long checked = 0;
    for (const std::string id : {"rho", "mu", "rho3", "mu3"}) {
        long long l = R.at(id).l;
        for (int k = 1; k <= 4; ++k)
            for (int eta = 0; eta < 2; ++eta) {
                Segment st = Segment::steinberg(line(id, eta), k);
                Status direct = discreteSeriesDistinction(R, st).status;
                // transfer-side rule: distinguished iff the line matches
                // eta^{kl-1}
                bool transfer =
                    R.chiDistinguished(TwistedCuspidal(id, Rational(0), eta), (int)((k * l - 1) % 2));
                if ((direct == Status::Distinguished) != transfer) {
                    detail = "direct rule disagrees with the transfer rule";
                    return false;
                }
                if (direct == Status::Neither) {
                    detail = "centered self-dual Steinberg classified Neither";
                    return false;
                }
                // even-ladder route through a two-rung ladder whose union is St_k
                if (k >= 2) {
                    Segment top(line(id, eta), Rational(3 - k, 2), Rational(k - 1, 2));
                    Multisegment pairLadder({top, segmentDual(R, top)});
                    Status viaLadder = properLadderDistinguished(R, pairLadder).status;
                    bool ladderDist = viaLadder == Status::Distinguished;
                    if (ladderDist != (direct == Status::EtaDistinguished)) {
                        detail = "even-ladder route disagrees at k=" + std::to_string(k);
                        return false;
                    }
                }
                ++checked;
            }
        // toy route: the k-rung chain of single points is distinguished
        // exactly when the line itself is (the eta^{l-1} rule, l odd)
        for (int k = 2; k <= 4; ++k) {
            std::vector<Segment> rungs;
            for (int i = 0; i < k; ++i)
                rungs.push_back(Segment(line(id), Rational(k - 1, 2) - Rational(i),
                                        Rational(k - 1, 2) - Rational(i)));
            Status chain = properLadderDistinguished(R, Multisegment(rungs)).status;
            bool toy = R.chiDistinguished(TwistedCuspidal(id, Rational(0), 0), 0);
            if ((chain == Status::Distinguished) != toy) {
                detail = "toy chain rule disagrees at k=" + std::to_string(k);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " grid points, three routes agree";
    return true;
}

bool criterion6(std::string& detail) {
    const auto& R = reg();
    long long total = 0, distinguished = 0;
    auto soundness = [&](const std::vector<Segment>& segs, Status status) -> bool {
        ++total;
        if (status != Status::Distinguished) return true;
        ++distinguished;
        std::vector<long long> mbar;
        for (const Segment& s : segs) mbar.push_back(s.realizedDegree(R));
        return !contributingCosets(R, segs, mbar).empty();
    };
    for (const Multisegment& ms : ladderSuite())
        if (!soundness(ms.segments, properLadderDistinguished(R, ms).status)) {
            detail = "distinguished ladder with no contributing coset";
            return false;
        }
    for (const auto& segs : standardSuite())
        if (!soundness(segs, standardModuleDistinguished(R, segs).status)) {
            detail = "distinguished standard module with no contributing coset";
            return false;
        }
    if (total < 40) {
        detail = "suite too small: " + std::to_string(total);
        return false;
    }
    std::ostringstream os;
    os << total << " suite members (" << distinguished << " distinguished), all sound";
    detail = os.str();
    return true;
}

bool criterion7(std::string& detail) {
    const auto& R = reg();
    long long checked = 0;
    for (const Multisegment& ms : ladderSuite()) {
        if (ms.size() < 2) continue;
        auto kernels = substandardKernels(ms);
        size_t r = ms.size() / 2; // only meaningful for even length
        for (size_t i = 0; i < kernels.size(); ++i) {
            Status st = standardModuleDistinguished(R, kernels[i].segments).status;
            bool isMiddle = (ms.size() % 2 == 0) && (i + 1 == r);
            if (!isMiddle) {
                if (st != Status::Neither) {
                    detail = "off-middle kernel distinguished";
                    return false;
                }
            } else {
                MergeResult m = merge(ms[r - 1], ms[r]);
                bool unionDist =
                    discreteSeriesDistinction(R, *m.unionSeg).status == Status::Distinguished;
                if ((st == Status::Distinguished) != unionDist) {
                    detail = "middle kernel disagrees with the union rule";
                    return false;
                }
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " kernels checked, zero violations";
    return true;
}

bool criterion8(std::string& detail) {
    const auto& R = reg();
    long long checked = 0;
    for (const Multisegment& ms : ladderSuite()) {
        if (ms.size() % 2 != 0) continue;
        if (ms[0].line.etaPow != 0) continue; // the alpha expansion is written on untwisted lines
        size_t r = ms.size() / 2;
        const Segment& mid = ms[r - 1];
        PeriodPoleReport rep = periodPoleAtMinusSr(R, ms);
        Status ladderStatus = properLadderDistinguished(R, ms).status;

        int k = (int)mid.length();
        int l = reg().at(mid.line.base).l;
        FactorProduct alpha = alphaFactor(mid.line.base, k, l);
        Rational sr = mid.realizedCenter(R);
        int atMinus = poleOrder(R, alpha, {{"s", -sr}});
        int atPlus = poleOrder(R, alpha, {{"s", sr}});

        bool juxt = relate(ms[r], ms[r - 1]).juxtaposed;
        if (juxt) {
            // holomorphic period; the quotient vanishes at -s_r exactly for a
            // distinguished ladder and at +s_r exactly otherwise
            if (rep.pole) { detail = "pole reported for a juxtaposed middle pair"; return false; }
            bool dist = ladderStatus == Status::Distinguished;
            if ((atMinus == -1) != dist || (atPlus == -1) == dist || atMinus + atPlus != -1) {
                detail = "functional-equation zero pattern off in the juxtaposed case";
                return false;
            }
        } else {
            // the quotient is regular and nonzero at both points; the period
            // pole tracks the intersection and the verdict is its complement
            if (atMinus != 0 || atPlus != 0) {
                detail = "unexpected zero or pole of the quotient in the overlapping case";
                return false;
            }
            MergeResult m = merge(ms[r - 1], ms[r]);
            bool interDist =
                discreteSeriesDistinction(R, *m.intersection).status == Status::Distinguished;
            if (rep.pole != interDist) {
                detail = "period pole disagrees with the intersection rule";
                return false;
            }
            if ((ladderStatus == Status::Distinguished) != !rep.pole) {
                detail = "distinction disagrees with holomorphy at -s_r";
                return false;
            }
        }
        ++checked;
    }
    detail = std::to_string(checked) + " even ladders checked, zero violations";
    return true;
}

bool criterion9(std::string& detail) {
    const long long expect[] = {1, 2, 4, 10, 26, 76};
    for (int t = 1; t <= 6; ++t) {
        std::vector<long long> ones((size_t)t, 1);
        long long count = (long long)enumerateCosets(ones).size();
        if (count != expect[t - 1]) {
            detail = "t=" + std::to_string(t) + " gave " + std::to_string(count);
            return false;
        }
    }
    detail = "counts 1,2,4,10,26,76 reproduced";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "reduced-word lemmas exhaustively verified (a,b <= 4)", 1.0, criterion1},
        {2, "closed spherical period equals the recursion (r <= 2, blocks <= 2)", 10.0, criterion2},
        {3, "gamma telescoping leaves exactly four atoms (k <= 8)", 1.0, criterion3},
        {4, "unramified L+ * L- equals the conjugate Rankin-Selberg (n <= 3)", 1.0, criterion4},
        {5, "discrete-series routes agree over the duality grid", 10.0, criterion5},
        {6, "distinguished verdicts admit contributing cosets", 30.0, criterion6},
        {7, "sub-standard kernels distinguished only at the middle", 30.0, criterion7},
        {8, "period poles match the functional-equation quotient", 30.0, criterion8},
        {9, "unit coset counts are the involution numbers (t <= 6)", 1.0, criterion9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budgetSeconds) {
            ok = false;
            detail += " [over budget]";
        }
        std::printf("[%s] criterion %d: %s - %s (%.3fs, budget %.0fs)\n", ok ? "PASS" : "FAIL",
                    c.number, c.label.c_str(), detail.c_str(), elapsed, c.budgetSeconds);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
