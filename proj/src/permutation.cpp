#include "ladist/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ladist {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > (int)img_.size() || seen[v - 1])
            throw argument_error("permutation image table is not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - i;
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw argument_error("adjacent transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::compose(const Permutation& v) const {
    if (n() != v.n()) throw argument_error("composing permutations of different degrees");
    std::vector<int> out(img_.size());
    for (int i = 1; i <= n(); ++i) out[i - 1] = (*this)(v(i));
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img_.size());
    for (int i = 1; i <= n(); ++i) out[img_[i - 1] - 1] = i;
    return Permutation(std::move(out));
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) > (*this)(j)) out.push_back({i, j});
    return out;
}

bool Permutation::isInvolution() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) os << ",";
        os << (*this)(i);
    }
    os << "]";
    return os.str();
}

Permutation embedBlockwise(const Permutation& w, const std::vector<int>& mbar) {
    if ((int)mbar.size() != w.n())
        throw argument_error("blockwise embedding needs one interval per letter");
    int n = 0;
    std::vector<int> start(mbar.size() + 1, 0);
    for (size_t k = 0; k < mbar.size(); ++k) {
        if (mbar[k] <= 0) throw argument_error("interval lengths must be positive");
        start[k] = n;
        n += mbar[k];
    }
    start[mbar.size()] = n;
    // target offset of interval k = total length of intervals mapped before it
    std::vector<int> target(mbar.size(), 0);
    for (int pos = 1, acc = 0; pos <= w.n(); ++pos) {
        int k = w.inverse()(pos) - 1;
        target[k] = acc;
        acc += mbar[k];
    }
    std::vector<int> img(n);
    for (size_t k = 0; k < mbar.size(); ++k)
        for (int off = 0; off < mbar[k]; ++off)
            img[start[k] + off] = target[k] + off + 1;
    return Permutation(std::move(img));
}

bool admissibleRoot(const Permutation& xi, int l) {
    if (l < 2 || l > xi.n()) throw argument_error("root index out of range");
    int u = xi(l - 1), v = xi(l);
    return u > v && !(u == l && v == l - 1);
}

namespace {

// Interval exchange permutations used by the two reduction lemmas.
Permutation exchangeW(ReductionLemma kind, int a, int b) {
    int c = 2 * a + 2 * b;
    std::vector<int> img(c);
    auto mapRange = [&](int lo, int len, int shift) {
        for (int p = lo; p < lo + len; ++p) img[p - 1] = p + shift;
    };
    if (kind == ReductionLemma::BB) {
        // [A1, A2, B2, B1]; w swaps A1<->B1 and A2<->B2
        mapRange(1, a, a + 2 * b);
        mapRange(a + 1, b, b);
        mapRange(a + b + 1, b, -b);
        mapRange(a + 2 * b + 1, a, -(a + 2 * b));
    } else {
        // [A1, A2, B1, B2]; w swaps A1<->B1 and A2<->B2
        mapRange(1, a + b, a + b);
        mapRange(a + b + 1, a + b, -(a + b));
    }
    return Permutation(std::move(img));
}

Permutation exchangeMu(ReductionLemma kind, int a, int b) {
    int c = 2 * a + 2 * b;
    int off = (kind == ReductionLemma::BB) ? a + b : a; // first moved position - 1
    std::vector<int> img(c);
    for (int p = 1; p <= c; ++p) img[p - 1] = p;
    for (int p = off + 1; p <= off + b; ++p) img[p - 1] = p + a;
    for (int p = off + b + 1; p <= off + b + a; ++p) img[p - 1] = p - b;
    return Permutation(std::move(img));
}

// mu_i as a word of adjacent transpositions; rightmost letter applies first.
std::vector<int> muWord(ReductionLemma kind, int a, int b, int i) {
    int base = (kind == ReductionLemma::BB) ? a + b + i : a + i;
    std::vector<int> letters;
    for (int k = 1; k <= b; ++k) letters.push_back(base + k);
    return letters; // composition order: letters.back() first
}

// letters in written order, the rightmost applied first: building forward
// with right-composition realizes exactly that order
Permutation wordToPermutation(int n, const std::vector<int>& letters) {
    Permutation p = Permutation::identity(n);
    for (int letter : letters) p = p.compose(Permutation::transposition(n, letter - 1));
    return p;
}

} // namespace

LemmaReport verifyReductionLemma(ReductionLemma kind, int a, int b) {
    if (a < 1 || b < 1) throw argument_error("lemma parameters must be positive");
    const int c = 2 * a + 2 * b;
    LemmaReport report;
    report.expected = (long long)a * b;

    Permutation w = exchangeW(kind, a, b);
    Permutation mu = exchangeMu(kind, a, b);

    // (i) the stated word multiplies out to mu, each mu_i has length b, and
    // the total length a*b equals l(mu), so the expression is reduced
    std::vector<Permutation> mus;
    long long sumLengths = 0;
    Permutation fromWord = Permutation::identity(c);
    for (int i = 1; i <= a; ++i) {
        Permutation mi = wordToPermutation(c, muWord(kind, a, b, i));
        sumLengths += mi.length();
        mus.push_back(mi);
        fromWord = mi.compose(fromWord); // mu = mu_a o ... o mu_1
    }
    report.lengthMu = mu.length();
    if (!(fromWord == mu) || report.lengthMu != report.expected || sumLengths != report.expected)
        report.ok = false;

    // (ii) every listed w_{i,r}(alpha) is negative and != -alpha
    for (int i = 1; i <= a; ++i) {
        for (int r = 1; r <= b; ++r) {
            int l;
            if (r >= 2) {
                l = (kind == ReductionLemma::BB) ? (a + b + i + r - 1) : (a + i + r - 1);
            } else {
                if (i > a - 1) continue; // no root is listed for r = 1, i = a
                l = (kind == ReductionLemma::BB) ? (a + b + i + 1 + b) : (a + i + 1 + b);
            }
            // prefix = (s_{base+r} o ... o s_{base+b}) o (mu_{i-1} o ... o mu_1)
            int base = (kind == ReductionLemma::BB) ? a + b + i : a + i;
            Permutation prefix = Permutation::identity(c);
            for (int j = 1; j <= i - 1; ++j) prefix = mus[j - 1].compose(prefix);
            std::vector<int> tail;
            for (int k = r; k <= b; ++k) tail.push_back(base + k);
            prefix = wordToPermutation(c, tail).compose(prefix);
            Permutation wir = prefix.compose(w).compose(prefix.inverse());
            if (!admissibleRoot(wir, l)) {
                report.ok = false;
                report.failures.push_back({i, r});
            }
        }
    }
    return report;
}

} // namespace ladist
