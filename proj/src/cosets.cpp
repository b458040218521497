#include "ladist/cosets.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "ladist/distinction.hpp"
#include "ladist/errors.hpp"

namespace ladist {

std::string CosetMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < t; ++i) {
        os << (i == 0 ? "[" : "; ");
        for (int j = 0; j < t; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::vector<CosetMatrix> enumerateCosets(const std::vector<long long>& mbar) {
    int t = (int)mbar.size();
    if (t < 1) throw argument_error("coset enumeration needs t >= 1");
    for (long long m : mbar)
        if (m <= 0) throw argument_error("coset row sums must be positive");

    std::vector<CosetMatrix> out;
    CosetMatrix a;
    a.t = t;
    a.entries.assign((size_t)t * t, 0);
    // fill the upper triangle row by row; a[i][j] for j < i is already fixed
    std::function<void(int)> fillRow = [&](int i) {
        if (i == t) {
            out.push_back(a);
            return;
        }
        long long fixed = 0;
        for (int j = 0; j < i; ++j) fixed += a.at(i, j);
        std::function<void(int, long long)> choose = [&](int j, long long remaining) {
            if (remaining < 0) return;
            if (j == t) {
                if (remaining == 0) fillRow(i + 1);
                return;
            }
            if (j == i) {
                // diagonal soaks up whatever the off-diagonal choices leave
                for (long long v = 0; v <= remaining; ++v) {
                    a.entries[(size_t)i * t + i] = v;
                    choose(j + 1, remaining - v);
                }
                a.entries[(size_t)i * t + i] = 0;
                return;
            }
            for (long long v = 0; v <= remaining; ++v) {
                a.entries[(size_t)i * t + j] = v;
                a.entries[(size_t)j * t + i] = v;
                choose(j + 1, remaining - v);
            }
            a.entries[(size_t)i * t + j] = 0;
            a.entries[(size_t)j * t + i] = 0;
        };
        choose(i, mbar[i] - fixed);
        // restore untouched lower entries for backtracking callers
        for (int j = i; j < t; ++j) {
            a.entries[(size_t)i * t + j] = 0;
            a.entries[(size_t)j * t + i] = 0;
        }
    };
    fillRow(0);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation blockExchangeInvolution(const CosetMatrix& a) {
    int t = a.t;
    long long n = 0;
    std::vector<std::vector<long long>> start((size_t)t, std::vector<long long>((size_t)t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            start[i][j] = n;
            n += a.at(i, j);
        }
    std::vector<int> img((size_t)n);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (long long off = 0; off < a.at(i, j); ++off)
                img[start[i][j] + off] = (int)(start[j][i] + off + 1);
    return Permutation(std::move(img));
}

namespace {

// Pieces of sigma_i along row i of the matrix, keyed by column; nullopt when
// the row split is not adapted to the cuspidal line.
std::optional<std::vector<std::optional<Segment>>> rowPieces(const CuspidalRegistry& reg,
                                                             const Segment& seg,
                                                             const CosetMatrix& a, int i) {
    std::vector<long long> parts;
    std::vector<int> cols;
    for (int j = 0; j < a.t; ++j)
        if (a.at(i, j) > 0) {
            parts.push_back(a.at(i, j));
            cols.push_back(j);
        }
    auto split = jacquetDiscrete(reg, seg, parts);
    if (!split) return std::nullopt;
    std::vector<std::optional<Segment>> byCol((size_t)a.t);
    for (size_t k = 0; k < cols.size(); ++k) byCol[cols[k]] = (*split)[k];
    return byCol;
}

} // namespace

std::vector<CosetMatrix> contributingCosets(const CuspidalRegistry& reg,
                                            const std::vector<Segment>& sigma,
                                            const std::vector<long long>& mbar) {
    if (sigma.size() != mbar.size())
        throw argument_error("one row sum per inducing segment is required");
    for (size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i].realizedDegree(reg) != mbar[i])
            throw argument_error("segment degree does not match its row sum");

    std::vector<CosetMatrix> out;
    for (const CosetMatrix& a : enumerateCosets(mbar)) {
        bool good = true;
        std::vector<std::vector<std::optional<Segment>>> pieces;
        for (size_t i = 0; i < sigma.size() && good; ++i) {
            auto row = rowPieces(reg, sigma[i], a, (int)i);
            if (!row) good = false;
            else pieces.push_back(std::move(*row));
        }
        if (!good) continue;
        for (int i = 0; i < a.t && good; ++i) {
            if (pieces[i][i] &&
                discreteSeriesDistinction(reg, *pieces[i][i]).status != Status::Distinguished)
                good = false;
            for (int j = i + 1; j < a.t && good; ++j)
                if (a.at(i, j) > 0 && !(*pieces[j][i] == segmentDual(reg, *pieces[i][j])))
                    good = false;
        }
        if (good) out.push_back(a);
    }
    return out;
}

} // namespace ladist
