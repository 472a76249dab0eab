#include "branekit/simplicial/verdict.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace branekit::simplicial {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int pi0(const SimplicialSet& X) {
    UnionFind uf(X.count(0));
    if (X.dim() >= 1)
        for (int e = 0; e < X.count(1); ++e)
            uf.unite(X.face(1, 0, e), X.face(1, 1, e));
    int classes = 0;
    for (int v = 0; v < X.count(0); ++v)
        if (uf.find(v) == v)
            ++classes;
    return classes;
}

bool collapses_to_point(const SimplicialSet& X) {
    const int D = X.dim();
    // dense ids for nondegenerate simplices
    std::vector<std::vector<int>> id(D + 1);
    std::vector<std::pair<int, int>> cells;  // (level, simplex)
    for (int n = 0; n <= D; ++n) {
        id[n].assign(X.count(n), -1);
        for (int s : X.nondegenerate(n)) {
            id[n][s] = static_cast<int>(cells.size());
            cells.push_back({n, s});
        }
    }
    const int N = static_cast<int>(cells.size());
    auto core = [&](int n, int z) {
        while (n > 0 && X.degenerate(n, z)) {
            for (int i = 0; i < n; ++i)
                if (X.degen(n - 1, i, X.face(n, i + 1, z)) == z) {
                    z = X.face(n, i + 1, z);
                    break;
                }
            --n;
        }
        return id[n][z];
    };
    // closure[c] = nondegenerate cells in the closure of c, c itself excluded
    std::vector<std::vector<int>> closure(N);
    for (int c = 0; c < N; ++c) {
        auto [n, s] = cells[c];
        std::vector<int> acc;
        for (int i = 0; n >= 1 && i <= n; ++i) {
            const int f = core(n - 1, X.face(n, i, s));
            acc.push_back(f);
            acc.insert(acc.end(), closure[f].begin(), closure[f].end());
        }
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        closure[c] = std::move(acc);
    }
    // covers[c] = cells whose closure contains c
    std::vector<std::vector<int>> covers(N);
    std::vector<int> cover_count(N, 0);
    for (int c = 0; c < N; ++c)
        for (int f : closure[c]) {
            covers[f].push_back(c);
            ++cover_count[f];
        }
    std::vector<bool> alive(N, true);
    std::vector<int> queue;
    for (int c = 0; c < N; ++c)
        queue.push_back(c);
    auto remove = [&](int c) {
        alive[c] = false;
        for (int f : closure[c])
            if (alive[f]) {
                --cover_count[f];
                queue.push_back(f);
            }
    };
    while (!queue.empty()) {
        const int c = queue.back();
        queue.pop_back();
        if (!alive[c] || cover_count[c] != 1)
            continue;
        int tau = -1;
        for (int t : covers[c])
            if (alive[t])
                tau = t;
        if (tau < 0)
            continue;
        auto [cn, cs] = cells[c];
        auto [tn, ts] = cells[tau];
        if (tn != cn + 1)
            continue;
        int hits = 0;
        for (int i = 0; i <= tn; ++i)
            if (X.face(tn, i, ts) == cs)
                ++hits;
        if (hits != 1)
            continue;
        remove(tau);
        remove(c);
    }
    int vertices = 0;
    for (int c = 0; c < N; ++c)
        if (alive[c]) {
            if (cells[c].first > 0)
                return false;
            ++vertices;
        }
    return vertices == 1;
}

HomotopyVerdict contractibility(const SimplicialSet& X, int reliable_dim) {
    const int D = X.dim();
    if (reliable_dim < 0 || reliable_dim > D)
        reliable_dim = D;
    if (X.is_empty())
        return {Status::NonContractible, "empty space"};
    if (reliable_dim < 1)
        return {Status::Inconclusive, "only level 0 is determined"};
    const int comps = pi0(X);
    if (comps != 1)
        return {Status::NonContractible, "pi0 = " + std::to_string(comps)};
    const auto hom = reduced_homology(X);
    for (int n = 0; n < std::min(D, reliable_dim); ++n) {
        if (hom.betti[n] != 0) {
            return {Status::NonContractible,
                    "H_" + std::to_string(n) + " has rank " + std::to_string(hom.betti[n])};
        }
        if (!hom.torsion[n].empty()) {
            std::ostringstream os;
            os << "H_" << n << " has torsion Z/" << hom.torsion[n][0];
            return {Status::NonContractible, os.str()};
        }
    }
    if (X.cone() && (X.cone()->has_initial || X.cone()->has_terminal))
        return {Status::Contractible,
                std::string("cone certificate: nerve of a category with ") +
                    (X.cone()->has_initial ? "an initial" : "a terminal") + " object"};
    if (reliable_dim == D && collapses_to_point(X))
        return {Status::Contractible, "collapses to a point"};
    return {Status::Inconclusive, "no certificate found"};
}

}  // namespace branekit::simplicial
