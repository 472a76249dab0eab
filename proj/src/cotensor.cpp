#include "branekit/simplicial/cotensor.hpp"

#include <algorithm>
#include <map>

namespace branekit::simplicial {

int act(const SimplicialSet& X, const std::vector<int>& alpha, int n, int x) {
    const int m = static_cast<int>(alpha.size()) - 1;
    for (int i = 1; i <= m; ++i)
        if (alpha[i] < alpha[i - 1])
            throw InputError("act: operator not monotone");
    if (m > X.dim() || n > X.dim())
        throw InputError("act: operator exceeds truncation");
    std::vector<int> a = alpha;
    int cur = x, ncur = n;
    // face phase: strip values of [ncur] missed by a, largest first
    while (true) {
        std::vector<bool> hit(ncur + 1, false);
        for (int v : a)
            hit[v] = true;
        int miss = -1;
        for (int v = ncur; v >= 0; --v)
            if (!hit[v]) {
                miss = v;
                break;
            }
        if (miss < 0)
            break;
        cur = X.face(ncur, miss, cur);
        --ncur;
        for (int& v : a)
            if (v > miss)
                --v;
    }
    // degeneracy phase: a is now surjective; peel duplicates and replay backwards
    std::vector<int> js;
    while (static_cast<int>(a.size()) - 1 > ncur) {
        int j = -1;
        for (size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] == a[i + 1]) {
                j = static_cast<int>(i);
                break;
            }
        js.push_back(j);
        a.erase(a.begin() + j);
    }
    for (auto it = js.rbegin(); it != js.rend(); ++it) {
        cur = X.degen(ncur, *it, cur);
        ++ncur;
    }
    if (ncur != m)
        throw InputError("act: internal level mismatch");
    return cur;
}

namespace {

/* Normal-form data for simplices of K: each degenerate simplex points to
 * (i, parent) with z = s_i(parent); repeated parents reach the core. */
struct DegRoute {
    std::vector<std::vector<int>> route_i;       // -1 for nondegenerate
    std::vector<std::vector<int>> route_parent;  // parent simplex at level-1
};

DegRoute routes(const SimplicialSet& K) {
    DegRoute r;
    r.route_i.resize(K.dim() + 1);
    r.route_parent.resize(K.dim() + 1);
    for (int n = 0; n <= K.dim(); ++n) {
        r.route_i[n].assign(K.count(n), -1);
        r.route_parent[n].assign(K.count(n), -1);
        for (int z = 0; z < K.count(n); ++z)
            for (int i = 0; n >= 1 && i < n; ++i)
                if (K.degen(n - 1, i, K.face(n, i + 1, z)) == z) {
                    r.route_i[n][z] = i;
                    r.route_parent[n][z] = K.face(n, i + 1, z);
                    break;
                }
    }
    return r;
}

struct MapSearch {
    const SimplicialSet& K;
    const SimplicialSet& X;
    DegRoute deg;
    long budget;
    // images[n][z], -1 while unknown
    std::vector<std::vector<int>> img;
    std::vector<std::pair<int, int>> order;  // nondegenerate simplices, level-major
    std::vector<MapTable> out;

    /* image of any K-simplex whose core lies at an already-completed position */
    int image_of(int n, int z) {
        if (img[n][z] >= 0)
            return img[n][z];
        const int i = deg.route_i[n][z];
        const int parent = deg.route_parent[n][z];
        const int pv = image_of(n - 1, parent);
        return img[n][z] = X.degen(n - 1, i, pv);
    }

    void emit() {
        MapTable t(K.dim() + 1);
        for (int n = 0; n <= K.dim(); ++n) {
            t[n].resize(K.count(n));
            for (int z = 0; z < K.count(n); ++z)
                t[n][z] = image_of(n, z);
        }
        out.push_back(std::move(t));
    }

    void search(size_t pos, std::vector<std::vector<int>>& assigned) {
        if (--budget < 0)
            throw CapError("enumerate_maps: search budget exceeded");
        if (pos == order.size()) {
            img = assigned;
            emit();
            return;
        }
        auto [n, z] = order[pos];
        // required face images are independent of the candidate
        std::vector<int> want(n >= 1 ? n + 1 : 0);
        img = assigned;
        for (int i = 0; n >= 1 && i <= n; ++i)
            want[i] = image_of(n - 1, K.face(n, i, z));
        for (int x = 0; x < X.count(n); ++x) {
            bool ok = true;
            for (int i = 0; n >= 1 && i <= n && ok; ++i)
                if (X.face(n, i, x) != want[i])
                    ok = false;
            if (!ok)
                continue;
            assigned[n][z] = x;
            search(pos + 1, assigned);
            assigned[n][z] = -1;
        }
    }
};

}  // namespace

std::vector<MapTable> enumerate_maps(const SimplicialSet& K, const SimplicialSet& X,
                                     const Caps& caps) {
    MapSearch s{K, X, routes(K), caps.map_search_nodes, {}, {}, {}};
    s.img.resize(K.dim() + 1);
    for (int n = 0; n <= K.dim(); ++n)
        s.img[n].assign(K.count(n), -1);
    for (int n = 0; n <= K.dim(); ++n)
        for (int z : K.nondegenerate(n))
            s.order.push_back({n, z});
    std::vector<std::vector<int>> assigned = s.img;
    s.search(0, assigned);
    return s.out;
}

CotensorResult cotensor(const SimplicialSet& X, const SimplicialSet& K, const Caps& caps) {
    const int D = std::min(X.dim(), K.dim());
    const int topK = K.top_nondegenerate_dim();
    std::vector<std::vector<MapTable>> elements(D + 1);
    std::vector<std::map<MapTable, int>> index(D + 1);
    std::vector<SimplicialSet> prisms;  // K x Delta^n
    for (int n = 0; n <= D; ++n) {
        prisms.push_back(product(K, spaces::delta(n, D)));
        elements[n] = enumerate_maps(prisms[n], X, caps);
        if (static_cast<int>(elements[n].size()) > caps.simplex_cap)
            throw CapError("cotensor: level " + std::to_string(n) + " exceeds simplex cap");
        for (size_t k = 0; k < elements[n].size(); ++k)
            index[n][elements[n][k]] = static_cast<int>(k);
    }
    std::vector<int> counts(D + 1);
    for (int n = 0; n <= D; ++n)
        counts[n] = static_cast<int>(elements[n].size());

    // a cosimplicial operator beta: Delta^a -> Delta^b induces
    // (id_K x beta)^* : (X^K)_b -> (X^K)_a by precomposition
    auto transport = [&](int a, int b, const std::vector<int>& beta, const MapTable& f) {
        // simplicial map K x Delta^a -> K x Delta^b over id_K and beta
        const auto& Pa = prisms[a];
        MapTable g(D + 1);
        const auto da = spaces::delta(a, D);
        const auto db = spaces::delta(b, D);
        for (int m = 0; m <= D; ++m) {
            g[m].resize(Pa.count(m));
            const int ya = da.count(m), yb = db.count(m);
            const auto seqs = spaces::monotone_sequences(m, a);
            for (int kz = 0; kz < K.count(m); ++kz)
                for (int t = 0; t < ya; ++t) {
                    std::vector<int> mapped(seqs[t].size());
                    for (size_t q = 0; q < seqs[t].size(); ++q)
                        mapped[q] = beta[seqs[t][q]];
                    const int tt = spaces::monotone_rank(mapped, b);
                    g[m][kz * ya + t] = f[m][kz * yb + tt];
                }
        }
        return g;
    };

    std::vector<std::vector<std::vector<int>>> faces(D + 1), degens(std::max(D, 0));
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> delta_i(n);  // [n-1] -> [n] skipping i
            for (int v = 0; v < n; ++v)
                delta_i[v] = v < i ? v : v + 1;
            for (int s = 0; s < counts[n]; ++s) {
                auto g = transport(n - 1, n, delta_i, elements[n][s]);
                auto it = index[n - 1].find(g);
                if (it == index[n - 1].end())
                    throw InputError("cotensor: face image not found");
                faces[n][i][s] = it->second;
            }
        }
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> sigma_i(n + 2);  // [n+1] -> [n] repeating i
            for (int v = 0; v <= n + 1; ++v)
                sigma_i[v] = v <= i ? std::min(v, i) : v - 1;
            for (int s = 0; s < counts[n]; ++s) {
                auto g = transport(n + 1, n, sigma_i, elements[n][s]);
                auto it = index[n + 1].find(g);
                if (it == index[n + 1].end())
                    throw InputError("cotensor: degeneracy image not found");
                degens[n][i][s] = it->second;
            }
        }
    }
    std::vector<bool> determined(D + 1);
    for (int n = 0; n <= D; ++n)
        determined[n] = (topK + n <= D) || X.is_discrete() || topK < 0;
    SimplicialSet space(D, std::move(counts), std::move(faces), std::move(degens));
    return {std::move(space), std::move(determined), std::move(elements)};
}

SimplicialMap path_endpoint(const CotensorResult& paths, const SimplicialSet& X, int j,
                            const Caps& caps) {
    (void)caps;
    const int D = paths.space.dim();
    const auto K = spaces::delta(1, D);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        const auto dn = spaces::delta(n, D);
        // pair (vertex-j degenerated to level n, the top simplex of Delta^n)
        const std::vector<int> jseq(n + 1, j);
        std::vector<int> topseq(n + 1);
        for (int v = 0; v <= n; ++v)
            topseq[v] = v;
        const int kidx = spaces::monotone_rank(jseq, 1);
        const int tidx = spaces::monotone_rank(topseq, n);
        const int pair = kidx * dn.count(n) + tidx;
        lv[n].resize(paths.space.count(n));
        for (int s = 0; s < paths.space.count(n); ++s)
            lv[n][s] = paths.elements[n][s][n][pair];
    }
    return {paths.space, X, std::move(lv), std::nullopt};
}

SimplicialMap cotensor_postcompose(const CotensorResult& xk, const CotensorResult& yk,
                                   const SimplicialMap& g) {
    const int D = xk.space.dim();
    std::vector<std::map<MapTable, int>> index(D + 1);
    for (int n = 0; n <= D; ++n)
        for (size_t k = 0; k < yk.elements[n].size(); ++k)
            index[n][yk.elements[n][k]] = static_cast<int>(k);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(xk.space.count(n));
        for (int s = 0; s < xk.space.count(n); ++s) {
            MapTable composed = xk.elements[n][s];
            for (int m = 0; m <= D; ++m)
                for (auto& v : composed[m])
                    v = g.levels[m][v];
            auto it = index[n].find(composed);
            if (it == index[n].end())
                throw InputError("cotensor_postcompose: image not found");
            lv[n][s] = it->second;
        }
    }
    return {xk.space, yk.space, std::move(lv), std::nullopt};
}

bool isomorphic(const SimplicialSet& A, const SimplicialSet& B, const Caps& caps) {
    if (A.dim() != B.dim())
        return false;
    for (int n = 0; n <= A.dim(); ++n)
        if (A.count(n) != B.count(n) || A.nondegenerate_count(n) != B.nondegenerate_count(n))
            return false;
    for (const auto& t : enumerate_maps(A, B, caps)) {
        SimplicialMap f{A, B, t, std::nullopt};
        if (f.is_levelwise_bijection())
            return true;
    }
    return false;
}

}  // namespace branekit::simplicial
