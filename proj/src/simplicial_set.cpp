#include "branekit/simplicial/simplicial_set.hpp"

#include <algorithm>

namespace branekit::simplicial {

SimplicialSet::SimplicialSet(int dim, std::vector<int> counts,
                             std::vector<std::vector<std::vector<int>>> faces,
                             std::vector<std::vector<std::vector<int>>> degens,
                             std::optional<ConeFlags> cone)
    : dim_(dim), counts_(std::move(counts)), faces_(std::move(faces)),
      degens_(std::move(degens)), cone_(std::move(cone)) {
    if (dim_ < 0)
        throw InputError("simplicial set: negative truncation dimension");
    if (static_cast<int>(counts_.size()) != dim_ + 1)
        throw InputError("simplicial set: count list size mismatch");
    if (static_cast<int>(faces_.size()) != dim_ + 1 ||
        static_cast<int>(degens_.size()) != std::max(dim_, 0))
        throw InputError("simplicial set: structure table size mismatch");
    for (int n = 1; n <= dim_; ++n) {
        if (static_cast<int>(faces_[n].size()) != n + 1)
            throw InputError("simplicial set: face table at level " + std::to_string(n));
        for (const auto& fi : faces_[n]) {
            if (static_cast<int>(fi.size()) != counts_[n])
                throw InputError("simplicial set: face column size");
            for (int v : fi)
                if (v < 0 || v >= counts_[n - 1])
                    throw InputError("simplicial set: face index out of range");
        }
    }
    for (int n = 0; n < dim_; ++n) {
        if (static_cast<int>(degens_[n].size()) != n + 1)
            throw InputError("simplicial set: degeneracy table at level " + std::to_string(n));
        for (const auto& si : degens_[n]) {
            if (static_cast<int>(si.size()) != counts_[n])
                throw InputError("simplicial set: degeneracy column size");
            for (int v : si)
                if (v < 0 || v >= counts_[n + 1])
                    throw InputError("simplicial set: degeneracy index out of range");
        }
    }
    // derive degeneracy flags: z in X_n is degenerate iff z = s_i(d_{i+1} z) for some i
    degenerate_.resize(dim_ + 1);
    nondeg_.resize(dim_ + 1);
    nondeg_counts_.assign(dim_ + 1, 0);
    for (int n = 0; n <= dim_; ++n) {
        degenerate_[n].assign(counts_[n], false);
        for (int s = 0; s < counts_[n]; ++s) {
            bool deg = false;
            for (int i = 0; n >= 1 && i < n && !deg; ++i)
                if (degens_[n - 1][i][faces_[n][i + 1][s]] == s)
                    deg = true;
            degenerate_[n][s] = deg;
            if (!deg) {
                nondeg_[n].push_back(s);
                ++nondeg_counts_[n];
            }
        }
    }
}

int SimplicialSet::top_nondegenerate_dim() const {
    for (int n = dim_; n >= 0; --n)
        if (nondeg_counts_[n] > 0)
            return n;
    return -1;
}

bool SimplicialSet::same_tables(const SimplicialSet& o) const {
    return dim_ == o.dim_ && counts_ == o.counts_ && faces_ == o.faces_ && degens_ == o.degens_;
}

ValidationReport validate(const SimplicialSet& X) {
    ValidationReport rep;
    const int D = X.dim();
    auto w = [&](int n, int s) { return std::to_string(n) + "#" + std::to_string(s); };
    // d_i d_j = d_{j-1} d_i  (i < j)
    for (int n = 2; n <= D; ++n)
        for (int s = 0; s < X.count(n); ++s)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (X.face(n - 1, i, X.face(n, j, s)) != X.face(n - 1, j - 1, X.face(n, i, s)))
                        rep.fail("d_i d_j = d_{j-1} d_i",
                                 w(n, s) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (int n = 0; n + 2 <= D; ++n)
        for (int s = 0; s < X.count(n); ++s)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    if (X.degen(n + 1, i, X.degen(n, j, s)) !=
                        X.degen(n + 1, j + 1, X.degen(n, i, s)))
                        rep.fail("s_i s_j = s_{j+1} s_i",
                                 w(n, s) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    // d_i s_j relations
    for (int n = 0; n + 1 <= D; ++n)
        for (int s = 0; s < X.count(n); ++s)
            for (int j = 0; j <= n; ++j) {
                const int sj = X.degen(n, j, s);
                for (int i = 0; i <= n + 1; ++i) {
                    const int got = X.face(n + 1, i, sj);
                    int want;
                    if (i == j || i == j + 1)
                        want = s;
                    else if (i < j)
                        want = n >= 1 ? X.degen(n - 1, j - 1, X.face(n, i, s)) : -2;
                    else
                        want = n >= 1 ? X.degen(n - 1, j, X.face(n, i - 1, s)) : -2;
                    if (want != -2 && got != want)
                        rep.fail("d_i s_j relation",
                                 w(n, s) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                }
            }
    // flag consistency: degenerate iff witnessed by some s_i
    for (int n = 1; n <= D; ++n)
        for (int s = 0; s < X.count(n); ++s) {
            bool hit = false;
            for (int i = 0; i <= n - 1; ++i)
                if (X.degen(n - 1, i, X.face(n, i + 1, s)) == s)
                    hit = true;
            if (hit != X.degenerate(n, s))
                rep.fail("degeneracy flag", w(n, s));
        }
    return rep;
}

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y) {
    const int D = std::min(X.dim(), Y.dim());
    std::vector<int> counts(D + 1);
    for (int n = 0; n <= D; ++n)
        counts[n] = X.count(n) * Y.count(n);
    std::vector<std::vector<std::vector<int>>> faces(D + 1), degens(std::max(D, 0));
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < X.count(n); ++x)
                for (int y = 0; y < Y.count(n); ++y)
                    faces[n][i][x * Y.count(n) + y] =
                        X.face(n, i, x) * Y.count(n - 1) + Y.face(n, i, y);
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < X.count(n); ++x)
                for (int y = 0; y < Y.count(n); ++y)
                    degens[n][i][x * Y.count(n) + y] =
                        X.degen(n, i, x) * Y.count(n + 1) + Y.degen(n, i, y);
    }
    std::optional<ConeFlags> cone;
    if (X.cone() && Y.cone())
        cone = ConeFlags{X.cone()->has_initial && Y.cone()->has_initial,
                         X.cone()->has_terminal && Y.cone()->has_terminal};
    return SimplicialSet(D, std::move(counts), std::move(faces), std::move(degens), cone);
}

namespace spaces {

SimplicialSet empty_space(int dim) {
    std::vector<int> counts(dim + 1, 0);
    std::vector<std::vector<std::vector<int>>> faces(dim + 1), degens(std::max(dim, 0));
    for (int n = 1; n <= dim; ++n)
        faces[n].assign(n + 1, {});
    for (int n = 0; n < dim; ++n)
        degens[n].assign(n + 1, {});
    return SimplicialSet(dim, std::move(counts), std::move(faces), std::move(degens));
}

SimplicialSet discrete(int points, int dim) {
    std::vector<int> counts(dim + 1, points);
    std::vector<std::vector<std::vector<int>>> faces(dim + 1), degens(std::max(dim, 0));
    std::vector<int> id(points);
    for (int p = 0; p < points; ++p)
        id[p] = p;
    for (int n = 1; n <= dim; ++n)
        faces[n].assign(n + 1, id);
    for (int n = 0; n < dim; ++n)
        degens[n].assign(n + 1, id);
    std::optional<ConeFlags> cone;
    if (points == 1)
        cone = ConeFlags{true, true};
    return SimplicialSet(dim, std::move(counts), std::move(faces), std::move(degens), cone);
}

std::vector<std::vector<int>> monotone_sequences(int len_minus_one, int top) {
    std::vector<std::vector<int>> out;
    if (top < 0)
        return out;
    std::vector<int> cur(len_minus_one + 1, 0);
    while (true) {
        bool mono = true;
        for (size_t i = 1; i < cur.size(); ++i)
            if (cur[i] < cur[i - 1])
                mono = false;
        if (mono)
            out.push_back(cur);
        int k = len_minus_one;
        while (k >= 0 && cur[k] == top)
            cur[k--] = 0;
        if (k < 0)
            break;
        ++cur[k];
    }
    return out;
}

int monotone_rank(const std::vector<int>& seq, int top) {
    auto all = monotone_sequences(static_cast<int>(seq.size()) - 1, top);
    auto it = std::lower_bound(all.begin(), all.end(), seq);
    if (it == all.end() || *it != seq)
        throw InputError("monotone_rank: sequence not found");
    return static_cast<int>(it - all.begin());
}

namespace {

SimplicialSet delta_like(int n, int dim, bool boundary) {
    std::vector<std::vector<std::vector<int>>> seqs(dim + 1);
    std::vector<std::vector<int>> keep(dim + 1);  // index into full list, or -1
    std::vector<int> counts(dim + 1, 0);
    std::vector<std::vector<std::vector<int>>> by_level(dim + 1);
    for (int m = 0; m <= dim; ++m) {
        auto all = monotone_sequences(m, n);
        keep[m].assign(all.size(), -1);
        for (size_t k = 0; k < all.size(); ++k) {
            if (boundary) {
                std::vector<bool> hit(n + 1, false);
                for (int v : all[k])
                    hit[v] = true;
                if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
                    continue;  // interior simplex, dropped on the boundary
            }
            keep[m][k] = counts[m]++;
            by_level[m].push_back(all[k]);
        }
        seqs[m] = std::move(all);
    }
    std::vector<std::vector<std::vector<int>>> faces(dim + 1), degens(std::max(dim, 0));
    for (int m = 1; m <= dim; ++m) {
        faces[m].assign(m + 1, std::vector<int>(counts[m]));
        for (int s = 0; s < counts[m]; ++s)
            for (int i = 0; i <= m; ++i) {
                std::vector<int> f = by_level[m][s];
                f.erase(f.begin() + i);
                faces[m][i][s] = keep[m - 1][monotone_rank(f, n)];
            }
    }
    for (int m = 0; m < dim; ++m) {
        degens[m].assign(m + 1, std::vector<int>(counts[m]));
        for (int s = 0; s < counts[m]; ++s)
            for (int i = 0; i <= m; ++i) {
                std::vector<int> f = by_level[m][s];
                f.insert(f.begin() + i, f[i]);
                degens[m][i][s] = keep[m + 1][monotone_rank(f, n)];
            }
    }
    std::optional<ConeFlags> cone;
    if (!boundary)
        cone = ConeFlags{true, true};
    return SimplicialSet(dim, std::move(counts), std::move(faces), std::move(degens), cone);
}

}  // namespace

SimplicialSet delta(int n, int dim) {
    return delta_like(n, dim, false);
}

SimplicialSet boundary_delta(int n, int dim) {
    return delta_like(n, dim, true);
}

}  // namespace spaces

}  // namespace branekit::simplicial
