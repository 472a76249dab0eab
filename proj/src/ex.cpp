#include "branekit/simplicial/ex.hpp"

#include <algorithm>
#include <map>

namespace branekit::simplicial {

namespace {

/* Poset of nonempty subsets of [n], ordered by inclusion; objects are bitmasks
 * 1..2^{n+1}-1 in increasing numeric order. */
FiniteCategory subset_poset(int n) {
    const int total = (1 << (n + 1)) - 1;
    std::vector<std::string> names(total);
    std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
    for (int a = 1; a <= total; ++a) {
        std::string s = "{";
        for (int v = 0; v <= n; ++v)
            if (a & (1 << v))
                s += std::to_string(v);
        names[a - 1] = s + "}";
        for (int b = 1; b <= total; ++b)
            if ((a & b) == a)
                leq[a - 1][b - 1] = true;
    }
    return cat::poset("sd[" + std::to_string(n) + "]", std::move(names), leq);
}

/* sd of the monotone operator beta: [a] -> [b] maps subsets through their image. */
CatFunctor subset_functor(const FiniteCategory& from, const FiniteCategory& to, int a,
                          const std::vector<int>& beta) {
    std::vector<int> obj_map(from.num_objects());
    for (int mask = 1; mask <= from.num_objects(); ++mask) {
        int img = 0;
        for (int v = 0; v <= a; ++v)
            if (mask & (1 << v))
                img |= 1 << beta[v];
        obj_map[mask - 1] = img - 1;
    }
    std::vector<int> mor_map(from.num_morphisms());
    for (int m = 0; m < from.num_morphisms(); ++m) {
        const int s = obj_map[from.src(m)], t = obj_map[from.tgt(m)];
        auto hs = to.homs(s, t);
        if (hs.size() != 1)
            throw InputError("subset_functor: poset hom not unique");
        mor_map[m] = hs[0];
    }
    return CatFunctor(from, to, std::move(obj_map), std::move(mor_map));
}

}  // namespace

ExResult ex_once(const SimplicialSet& X, const Caps& caps) {
    const int D = X.dim();
    std::vector<Nerve> sd;
    for (int n = 0; n <= D; ++n)
        sd.push_back(nerve(subset_poset(n), D));

    std::vector<std::vector<MapTable>> elements(D + 1);
    std::vector<std::map<MapTable, int>> index(D + 1);
    std::vector<int> counts(D + 1);
    for (int n = 0; n <= D; ++n) {
        elements[n] = enumerate_maps(sd[n].space, X, caps);
        if (static_cast<int>(elements[n].size()) > caps.simplex_cap)
            throw CapError("ex: level " + std::to_string(n) + " exceeds simplex cap");
        counts[n] = static_cast<int>(elements[n].size());
        for (size_t k = 0; k < elements[n].size(); ++k)
            index[n][elements[n][k]] = static_cast<int>(k);
    }

    auto transport = [&](int a, int b, const std::vector<int>& beta, const MapTable& f) {
        // precompose f: sd Delta^b -> X with sd(beta): sd Delta^a -> sd Delta^b
        auto F = subset_functor(sd[a].category, sd[b].category, a, beta);
        auto g = nerve_map(sd[a], sd[b], F);
        MapTable t(D + 1);
        for (int m = 0; m <= D; ++m) {
            t[m].resize(sd[a].space.count(m));
            for (int z = 0; z < sd[a].space.count(m); ++z)
                t[m][z] = f[m][g.levels[m][z]];
        }
        return t;
    };

    std::vector<std::vector<std::vector<int>>> faces(D + 1), degens(std::max(D, 0));
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> delta_i(n);
            for (int v = 0; v < n; ++v)
                delta_i[v] = v < i ? v : v + 1;
            for (int s = 0; s < counts[n]; ++s) {
                auto t = transport(n - 1, n, delta_i, elements[n][s]);
                faces[n][i][s] = index[n - 1].at(t);
            }
        }
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> sigma_i(n + 2);
            for (int v = 0; v <= n + 1; ++v)
                sigma_i[v] = v <= i ? std::min(v, i) : v - 1;
            for (int s = 0; s < counts[n]; ++s) {
                auto t = transport(n + 1, n, sigma_i, elements[n][s]);
                degens[n][i][s] = index[n + 1].at(t);
            }
        }
    }
    SimplicialSet space(D, counts, std::move(faces), std::move(degens));

    // last-vertex inclusion: x at level n goes to (chain S_0 <= ... <= S_m) -> (max S_i)* x
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(X.count(n));
        for (int x = 0; x < X.count(n); ++x) {
            MapTable t(D + 1);
            for (int m = 0; m <= D; ++m) {
                t[m].resize(sd[n].space.count(m));
                for (int z = 0; z < sd[n].space.count(m); ++z) {
                    const auto& chain = sd[n].chains[m][z];
                    std::vector<int> alpha(m + 1);
                    if (m == 0) {
                        const int mask = chain[0] + 1;
                        alpha[0] = 31 - __builtin_clz(mask);
                    } else {
                        const auto& C = sd[n].category;
                        for (int q = 0; q <= m; ++q) {
                            const int obj =
                                q == 0 ? C.src(chain[0]) : C.tgt(chain[q - 1]);
                            alpha[q] = 31 - __builtin_clz(obj + 1);
                        }
                    }
                    t[m][z] = act(X, alpha, n, x);
                }
            }
            auto it = index[n].find(t);
            if (it == index[n].end())
                throw InputError("ex: last-vertex image not found");
            lv[n][x] = it->second;
        }
    }
    SimplicialMap inclusion{X, space, std::move(lv), std::nullopt};
    return {std::move(space), std::move(inclusion), std::move(elements)};
}

ExResult ex_k(const SimplicialSet& X, int k, const Caps& caps) {
    if (k > caps.ex_cap)
        throw CapError("ex_k: k exceeds configured Ex cap");
    ExResult cur{X, identity_map(X), {}};
    for (int it = 0; it < k; ++it) {
        ExResult next = ex_once(cur.space, caps);
        SimplicialMap inc = compose(next.inclusion, cur.inclusion);
        cur = ExResult{std::move(next.space), std::move(inc), std::move(next.elements)};
    }
    return cur;
}

SimplicialMap ex_k_functorial(const SimplicialMap& g, int k, const Caps& caps) {
    SimplicialMap cur = g;
    for (int it = 0; it < k; ++it) {
        ExResult exs = ex_once(cur.source, caps);
        ExResult ext = ex_once(cur.target, caps);
        const int D = exs.space.dim();
        std::vector<std::map<MapTable, int>> index(D + 1);
        for (int n = 0; n <= D; ++n)
            for (size_t q = 0; q < ext.elements[n].size(); ++q)
                index[n][ext.elements[n][q]] = static_cast<int>(q);
        std::vector<std::vector<int>> lv(D + 1);
        for (int n = 0; n <= D; ++n) {
            lv[n].resize(exs.space.count(n));
            for (int s = 0; s < exs.space.count(n); ++s) {
                MapTable composed = exs.elements[n][s];
                for (int m = 0; m <= D; ++m)
                    for (auto& v : composed[m])
                        v = cur.levels[m][v];
                auto itx = index[n].find(composed);
                if (itx == index[n].end())
                    throw InputError("ex_k_functorial: image not found");
                lv[n][s] = itx->second;
            }
        }
        cur = SimplicialMap{std::move(exs.space), std::move(ext.space), std::move(lv),
                            std::nullopt};
    }
    return cur;
}

}  // namespace branekit::simplicial
