#pragma once

#include <vector>

#include "ladist/permutation.hpp"
#include "ladist/segment.hpp"

namespace ladist {

/// Symmetric t x t matrix over the non-negative integers whose i-th row sums
/// to m_i; each such matrix indexes one P\G/H double coset.
struct CosetMatrix {
    int t = 0;
    std::vector<long long> entries; // row-major

    long long at(int i, int j) const { return entries[(size_t)i * t + j]; } // 0-indexed
    bool operator==(const CosetMatrix& o) const { return t == o.t && entries == o.entries; }
    bool operator<(const CosetMatrix& o) const { return entries < o.entries; }
    std::string str() const;
};

/// All coset matrices for the given row sums, in lexicographic (row-major)
/// order, without duplicates.
std::vector<CosetMatrix> enumerateCosets(const std::vector<long long>& mbar);

/// The order-two permutation w_a attached to a coset matrix: writing [1,n] as
/// consecutive intervals I_{1,1}, I_{1,2}, ..., I_{t,t} of lengths given by
/// the nonzero entries in row-major order, w_a fixes each I_{i,i} and
/// exchanges I_{i,j} with I_{j,i} order-preservingly.
Permutation blockExchangeInvolution(const CosetMatrix& a);

/// Double cosets that can carry an invariant functional for the standard
/// module induced from the given discrete series: each segment must split
/// along its row into line-adapted pieces, diagonal pieces must be
/// distinguished, and off-diagonal pieces must pair into conjugate duals.
std::vector<CosetMatrix> contributingCosets(const CuspidalRegistry& reg,
                                            const std::vector<Segment>& sigma,
                                            const std::vector<long long>& mbar);

} // namespace ladist
