#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ladist/errors.hpp"

namespace ladist {

/// Permutation of {1,...,n} as a dense image table (1-indexed API).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// w_n: i -> n+1-i.
    static Permutation longest(int n);
    /// Adjacent transposition (i, i+1) in S_n.
    static Permutation transposition(int n, int i);

    int n() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }

    /// (w compose v)(i) = w(v(i)).
    Permutation compose(const Permutation& v) const;
    Permutation inverse() const;

    std::vector<std::pair<int, int>> inversions() const;
    long long length() const { return (long long)inversions().size(); }

    bool isInvolution() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    std::string str() const;

private:
    std::vector<int> img_;
};

/// w^{mbar}: embed w in S_t into S_{sum mbar} by permuting the consecutive
/// intervals I_1,...,I_t of lengths mbar without internal reordering.
Permutation embedBlockwise(const Permutation& w, const std::vector<int>& mbar);

/// For alpha = e_{l-1} - e_l, whether xi(alpha) < 0 but xi(alpha) != -alpha,
/// i.e. xi(l-1) > xi(l) and (xi(l-1), xi(l)) != (l, l-1).
bool admissibleRoot(const Permutation& xi, int l);

enum class ReductionLemma { BB, AB };

struct LemmaReport {
    bool ok = true;
    long long lengthMu = 0;
    long long expected = 0;
    std::vector<std::pair<int, int>> failures; // offending (i, r)
};

/// Builds the interval exchange w, the words mu_i and the conjugates w_{i,r}
/// literally from their defining data for c = 2a + 2b, and checks that the
/// word for mu is reduced of length a*b and that every listed root image is
/// negative and different from -alpha.
LemmaReport verifyReductionLemma(ReductionLemma kind, int a, int b);

} // namespace ladist
