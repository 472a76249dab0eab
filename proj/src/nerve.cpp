#include "branekit/simplicial/nerve.hpp"

#include <algorithm>

namespace branekit::simplicial {

int Nerve::index_of(int n, const std::vector<int>& chain) const {
    const auto& lv = chains[n];
    auto it = std::lower_bound(lv.begin(), lv.end(), chain);
    if (it == lv.end() || *it != chain)
        throw InputError("nerve: chain not found at level " + std::to_string(n));
    return static_cast<int>(it - lv.begin());
}

Nerve nerve(const FiniteCategory& C, int dim, int level_cap) {
    std::vector<std::vector<std::vector<int>>> chains(dim + 1);
    for (int o = 0; o < C.num_objects(); ++o)
        chains[0].push_back({o});
    for (int n = 1; n <= dim; ++n) {
        if (static_cast<long long>(chains[n - 1].size()) * C.num_morphisms() > level_cap)
            throw CapError("nerve: level " + std::to_string(n) + " of N(" + C.name() +
                           ") exceeds the simplex cap");
        for (const auto& prev : chains[n - 1]) {
            const int end = n == 1 ? prev[0] : C.tgt(prev.back());
            for (int m = 0; m < C.num_morphisms(); ++m)
                if (C.src(m) == end) {
                    auto next = n == 1 ? std::vector<int>{} : prev;
                    if (n == 1)
                        next = {m};
                    else
                        next.push_back(m);
                    chains[n].push_back(std::move(next));
                }
        }
        std::sort(chains[n].begin(), chains[n].end());
    }
    std::vector<int> counts(dim + 1);
    for (int n = 0; n <= dim; ++n)
        counts[n] = static_cast<int>(chains[n].size());

    auto index_of = [&](int n, const std::vector<int>& chain) {
        auto it = std::lower_bound(chains[n].begin(), chains[n].end(), chain);
        return static_cast<int>(it - chains[n].begin());
    };

    std::vector<std::vector<std::vector<int>>> faces(dim + 1), degens(std::max(dim, 0));
    for (int n = 1; n <= dim; ++n) {
        faces[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int s = 0; s < counts[n]; ++s) {
            const auto& ch = chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (n == 1) {
                    // edge m: d_0 = target, d_1 = source
                    f = {i == 0 ? C.tgt(ch[0]) : C.src(ch[0])};
                } else if (i == 0) {
                    f.assign(ch.begin() + 1, ch.end());
                } else if (i == n) {
                    f.assign(ch.begin(), ch.end() - 1);
                } else {
                    f.assign(ch.begin(), ch.end());
                    f[i - 1] = C.compose(ch[i], ch[i - 1]);
                    f.erase(f.begin() + i);
                }
                faces[n][i][s] = index_of(n - 1, f);
            }
        }
    }
    for (int n = 0; n < dim; ++n) {
        degens[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int s = 0; s < counts[n]; ++s) {
            const auto& ch = chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                if (n == 0) {
                    f = {C.identity(ch[0])};
                } else {
                    f = ch;
                    const int obj = i == 0 ? C.src(ch[0]) : C.tgt(ch[i - 1]);
                    f.insert(f.begin() + i, C.identity(obj));
                }
                degens[n][i][s] = index_of(n + 1, f);
            }
        }
    }
    ConeFlags cone{C.has_initial(), C.has_terminal()};
    SimplicialSet space(dim, std::move(counts), std::move(faces), std::move(degens), cone);
    return Nerve{C, std::move(space), std::move(chains)};
}

SimplicialMap nerve_map(const Nerve& src, const Nerve& tgt, const CatFunctor& F) {
    const int D = std::min(src.space.dim(), tgt.space.dim());
    std::vector<std::vector<int>> lv(D + 1);
    lv[0].resize(src.space.count(0));
    for (int o = 0; o < src.space.count(0); ++o)
        lv[0][o] = tgt.index_of(0, {F.obj_map[src.chains[0][o][0]]});
    for (int n = 1; n <= D; ++n) {
        lv[n].resize(src.space.count(n));
        for (int s = 0; s < src.space.count(n); ++s) {
            std::vector<int> img(src.chains[n][s].size());
            for (size_t k = 0; k < img.size(); ++k)
                img[k] = F.mor_map[src.chains[n][s][k]];
            lv[n][s] = tgt.index_of(n, img);
        }
    }
    return {src.space, tgt.space, std::move(lv),
            NerveFunctorData{F.source, F.target, F.obj_map, F.mor_map}};
}

}  // namespace branekit::simplicial
