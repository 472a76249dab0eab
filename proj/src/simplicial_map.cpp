#include "branekit/simplicial/simplicial_map.hpp"

namespace branekit::simplicial {

bool SimplicialMap::is_levelwise_bijection() const {
    for (int n = 0; n <= source.dim() && n <= target.dim(); ++n) {
        if (source.count(n) != target.count(n))
            return false;
        std::vector<char> hit(target.count(n), 0);
        for (int v : levels[n]) {
            if (hit[v])
                return false;
            hit[v] = 1;
        }
    }
    return true;
}

ValidationReport validate(const SimplicialMap& f) {
    ValidationReport rep;
    const int D = std::min(f.source.dim(), f.target.dim());
    if (static_cast<int>(f.levels.size()) < D + 1) {
        rep.fail("level table size", std::to_string(f.levels.size()));
        return rep;
    }
    for (int n = 0; n <= D; ++n) {
        if (static_cast<int>(f.levels[n].size()) != f.source.count(n)) {
            rep.fail("level size", std::to_string(n));
            return rep;
        }
        for (int v : f.levels[n])
            if (v < 0 || v >= f.target.count(n)) {
                rep.fail("image out of range", std::to_string(n));
                return rep;
            }
    }
    for (int n = 1; n <= D; ++n)
        for (int s = 0; s < f.source.count(n); ++s)
            for (int i = 0; i <= n; ++i)
                if (f.levels[n - 1][f.source.face(n, i, s)] !=
                    f.target.face(n, i, f.levels[n][s]))
                    rep.fail("commutes with d_i",
                             std::to_string(n) + "#" + std::to_string(s) + " i=" +
                                 std::to_string(i));
    for (int n = 0; n < D; ++n)
        for (int s = 0; s < f.source.count(n); ++s)
            for (int i = 0; i <= n; ++i)
                if (f.levels[n + 1][f.source.degen(n, i, s)] !=
                    f.target.degen(n, i, f.levels[n][s]))
                    rep.fail("commutes with s_i",
                             std::to_string(n) + "#" + std::to_string(s) + " i=" +
                                 std::to_string(i));
    return rep;
}

SimplicialMap identity_map(const SimplicialSet& X) {
    std::vector<std::vector<int>> lv(X.dim() + 1);
    for (int n = 0; n <= X.dim(); ++n) {
        lv[n].resize(X.count(n));
        for (int s = 0; s < X.count(n); ++s)
            lv[n][s] = s;
    }
    return {X, X, std::move(lv), std::nullopt};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!f.target.same_tables(g.source))
        throw InputError("simplicial compose: middle objects disagree");
    const int D = std::min(f.source.dim(), g.target.dim());
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(f.source.count(n));
        for (int s = 0; s < f.source.count(n); ++s)
            lv[n][s] = g.levels[n][f.levels[n][s]];
    }
    std::optional<NerveFunctorData> nd;
    if (f.nerve_data && g.nerve_data) {
        std::vector<int> om(f.nerve_data->obj_map.size()), mm(f.nerve_data->mor_map.size());
        for (size_t i = 0; i < om.size(); ++i)
            om[i] = g.nerve_data->obj_map[f.nerve_data->obj_map[i]];
        for (size_t i = 0; i < mm.size(); ++i)
            mm[i] = g.nerve_data->mor_map[f.nerve_data->mor_map[i]];
        nd = NerveFunctorData{f.nerve_data->source_cat, g.nerve_data->target_cat, std::move(om),
                              std::move(mm)};
    }
    return {f.source, g.target, std::move(lv), std::move(nd)};
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g) {
    SimplicialSet src = product(f.source, g.source);
    SimplicialSet tgt = product(f.target, g.target);
    std::vector<std::vector<int>> lv(src.dim() + 1);
    for (int n = 0; n <= src.dim(); ++n) {
        lv[n].resize(src.count(n));
        for (int x = 0; x < f.source.count(n); ++x)
            for (int y = 0; y < g.source.count(n); ++y)
                lv[n][x * g.source.count(n) + y] =
                    f.levels[n][x] * g.target.count(n) + g.levels[n][y];
    }
    return {std::move(src), std::move(tgt), std::move(lv), std::nullopt};
}

int degenerate_vertex(const SimplicialSet& Y, int vertex, int n) {
    int cur = vertex;
    for (int k = 0; k < n; ++k)
        cur = Y.degen(k, 0, cur);
    return cur;
}

SimplicialMap constant_map(const SimplicialSet& X, const SimplicialSet& Y, int vertex) {
    const int D = std::min(X.dim(), Y.dim());
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        lv[n].assign(X.count(n), degenerate_vertex(Y, vertex, n));
    return {X, Y, std::move(lv), std::nullopt};
}

}  // namespace branekit::simplicial
