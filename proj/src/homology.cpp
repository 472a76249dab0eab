#include "branekit/simplicial/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace branekit::simplicial {

namespace {

constexpr long long kOverflowGuard = 1LL << 40;

void check_entry(long long v) {
    if (v > kOverflowGuard || v < -kOverflowGuard)
        throw CapError("smith normal form: entry growth beyond guard");
}

}  // namespace

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
    std::vector<long long> factors;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // pick pivot with minimal nonzero absolute value in the remaining block
        size_t pr = r, pc = c;
        long long best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0)
            break;
        std::swap(m[r], m[pr]);
        for (size_t i = 0; i < rows; ++i)
            std::swap(m[i][c], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < rows; ++i)
                if (m[i][c] != 0) {
                    const long long q = m[i][c] / m[r][c];
                    for (size_t j = c; j < cols; ++j) {
                        m[i][j] -= q * m[r][j];
                        check_entry(m[i][j]);
                    }
                    if (m[i][c] != 0) {  // remainder smaller than pivot; swap up and retry
                        std::swap(m[r], m[i]);
                        clean = false;
                    }
                }
            for (size_t j = c + 1; j < cols; ++j)
                if (m[r][j] != 0) {
                    const long long q = m[r][j] / m[r][c];
                    for (size_t i = r; i < rows; ++i) {
                        m[i][j] -= q * m[i][c];
                        check_entry(m[i][j]);
                    }
                    if (m[r][j] != 0) {
                        for (size_t i = 0; i < rows; ++i)
                            std::swap(m[i][c], m[i][j]);
                        clean = false;
                    }
                }
            // pivot must divide every remaining entry; if not, mix that row in
            if (clean) {
                for (size_t i = r + 1; i < rows && clean; ++i)
                    for (size_t j = c + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[r][c] != 0) {
                            for (size_t k = c; k < cols; ++k) {
                                m[r][k] += m[i][k];
                                check_entry(m[r][k]);
                            }
                            clean = false;
                        }
            }
        }
        factors.push_back(std::abs(m[r][c]));
        ++r;
        ++c;
    }
    return factors;
}

ChainComplexReport reduced_homology(const SimplicialSet& X) {
    const int D = X.dim();
    // boundary matrices of the normalized complex; rows = (n-1)-simplices, cols = n-simplices
    // degree -1 is the augmentation row of ones
    std::vector<std::vector<std::vector<long long>>> bnd(D + 1);
    {
        const auto& nd0 = X.nondegenerate(0);
        bnd[0].assign(1, std::vector<long long>(nd0.size(), 1));
    }
    for (int n = 1; n <= D; ++n) {
        const auto& nd = X.nondegenerate(n);
        const auto& ndprev = X.nondegenerate(n - 1);
        std::vector<int> prev_index(X.count(n - 1), -1);
        for (size_t k = 0; k < ndprev.size(); ++k)
            prev_index[ndprev[k]] = static_cast<int>(k);
        bnd[n].assign(ndprev.size(), std::vector<long long>(nd.size(), 0));
        for (size_t col = 0; col < nd.size(); ++col)
            for (int i = 0; i <= n; ++i) {
                const int f = X.face(n, i, nd[col]);
                if (X.degenerate(n - 1, f))
                    continue;
                bnd[n][prev_index[f]][col] += (i % 2 == 0) ? 1 : -1;
            }
    }
    std::vector<int> rank(D + 2, 0);
    std::vector<std::vector<long long>> divisors(D + 1);
    for (int n = 0; n <= D; ++n) {
        auto f = smith_invariant_factors(bnd[n]);
        // zero invariant factors cannot occur; rank = count of them
        rank[n] = static_cast<int>(f.size());
        divisors[n] = std::move(f);
    }
    rank[D + 1] = 0;

    ChainComplexReport rep;
    rep.betti.resize(D);
    rep.torsion.resize(D);
    for (int n = 0; n < D; ++n) {
        const int dimC = X.nondegenerate_count(n);
        rep.betti[n] = dimC - rank[n] - rank[n + 1];
        for (long long d : divisors[n + 1])
            if (d > 1)
                rep.torsion[n].push_back(d);
    }
    rep.top_kernel_rank = X.nondegenerate_count(D) - rank[D];

    for (int n = 0; n <= D; ++n)
        rep.euler_simplices += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(
                                   X.nondegenerate_count(n));
    // unreduced homology Euler characteristic of the truncated complex;
    // rank[0] is the augmentation rank, which converts reduced betti_0 back
    long long eh = rank[0];
    for (int n = 0; n < D; ++n)
        eh += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.betti[n]);
    eh += (D % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.top_kernel_rank);
    rep.euler_homology = eh;
    return rep;
}

bool ChainComplexReport::trivial_up_to(int deg) const {
    for (int n = 0; n <= deg && n < static_cast<int>(betti.size()); ++n)
        if (betti[n] != 0 || !torsion[n].empty())
            return false;
    return true;
}

}  // namespace branekit::simplicial
