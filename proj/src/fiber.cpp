#include "branekit/simplicial/fiber.hpp"

#include <algorithm>
#include <map>

namespace branekit::simplicial {

namespace {

FiberResult discrete_fiber(const SimplicialMap& f, int basepoint) {
    std::vector<int> members;
    for (int v = 0; v < f.source.count(0); ++v)
        if (f.levels[0][v] == basepoint)
            members.push_back(v);
    FiberResult r{spaces::discrete(static_cast<int>(members.size()), f.source.dim()),
                  FiberBranch::Discrete,
                  0,
                  f.source.dim(),
                  std::move(members),
                  std::nullopt,
                  std::nullopt};
    return r;
}

FiberResult comma_fiber(const SimplicialMap& f, int basepoint, const Caps& caps) {
    const auto& nd = *f.nerve_data;
    CatFunctor F(nd.source_cat, nd.target_cat, nd.obj_map, nd.mor_map);
    CommaCategory cc = comma_over(F, basepoint);
    Nerve nv = nerve(cc.cat, f.source.dim(), caps.simplex_cap);
    FiberResult r{nv.space,
                  FiberBranch::CommaNerve,
                  0,
                  f.source.dim(),
                  {},
                  FiberResult::CommaData{std::move(nv), std::move(cc.objects),
                                         std::move(cc.carriers),
                                         nd.target_cat.identity(basepoint)},
                  std::nullopt};
    return r;
}

FiberResult path_fiber(const SimplicialMap& f, int basepoint, const Caps& caps,
                       const PathContext* context) {
    const int D = std::min(f.source.dim(), f.target.dim());
    std::optional<PathContext> own;
    if (context == nullptr || !context->target.same_tables(f.target)) {
        own = make_path_context(f.target, caps);
        context = &*own;
    }
    const ExResult& exy = context->exy;
    const int k = context->ex_used;
    const SimplicialSet& ytilde = exy.space;
    SimplicialMap ftilde = compose(exy.inclusion, f);
    const int ybase = exy.inclusion.levels[0][basepoint];

    const CotensorResult& paths = context->paths;
    const SimplicialMap& ev0 = context->ev0;
    const SimplicialMap& ev1 = context->ev1;

    // level n members: (x, p) with ev0(p) = ftilde(x), ev1(p) = degenerate basepoint
    std::vector<std::vector<std::pair<int, int>>> pairs(D + 1);
    std::vector<std::map<std::pair<int, int>, int>> index(D + 1);
    std::vector<int> counts(D + 1);
    for (int n = 0; n <= D; ++n) {
        const int ystar = degenerate_vertex(ytilde, ybase, n);
        for (int x = 0; x < f.source.count(n); ++x)
            for (int p = 0; p < paths.space.count(n); ++p)
                if (ev0.levels[n][p] == ftilde.levels[n][x] && ev1.levels[n][p] == ystar)
                    pairs[n].push_back({x, p});
        counts[n] = static_cast<int>(pairs[n].size());
        if (counts[n] > caps.simplex_cap)
            throw CapError("homotopy_fiber: path space exceeds simplex cap");
        for (int i = 0; i < counts[n]; ++i)
            index[n][pairs[n][i]] = i;
    }
    std::vector<std::vector<std::vector<int>>> faces(D + 1), degens(std::max(D, 0));
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < counts[n]; ++s) {
                auto [x, p] = pairs[n][s];
                faces[n][i][s] = index[n - 1].at(
                    {f.source.face(n, i, x), paths.space.face(n, i, p)});
            }
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, std::vector<int>(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < counts[n]; ++s) {
                auto [x, p] = pairs[n][s];
                degens[n][i][s] = index[n + 1].at(
                    {f.source.degen(n, i, x), paths.space.degen(n, i, p)});
            }
    }
    int reliable = D;
    for (int n = 0; n <= D; ++n)
        if (!paths.determined[n]) {
            reliable = n - 1;
            break;
        }
    SimplicialSet space(D, std::move(counts), std::move(faces), std::move(degens));
    FiberResult r{std::move(space),
                  FiberBranch::PathSpace,
                  k,
                  reliable,
                  {},
                  std::nullopt,
                  FiberResult::PathData{ytilde, std::move(paths), std::move(pairs)}};
    return r;
}

}  // namespace

PathContext make_path_context(const SimplicialSet& Y, const Caps& caps) {
    const int k = Y.is_discrete() ? 0 : caps.ex_cap;
    ExResult exy = ex_k(Y, k, caps);
    CotensorResult paths = cotensor(exy.space, spaces::delta(1, Y.dim()), caps);
    SimplicialMap ev0 = path_endpoint(paths, exy.space, 0, caps);
    SimplicialMap ev1 = path_endpoint(paths, exy.space, 1, caps);
    return {Y, std::move(exy), std::move(paths), std::move(ev0), std::move(ev1), k};
}

FiberResult homotopy_fiber(const SimplicialMap& f, int basepoint, const Caps& caps,
                           std::optional<FiberBranch> force, const PathContext* context) {
    if (basepoint < 0 || basepoint >= f.target.count(0))
        throw InputError("homotopy_fiber: basepoint is not a vertex of the target");
    FiberBranch branch;
    if (force) {
        branch = *force;
    } else if (f.source.is_discrete() && f.target.is_discrete()) {
        branch = FiberBranch::Discrete;
    } else if (f.nerve_data) {
        branch = FiberBranch::CommaNerve;
    } else {
        branch = FiberBranch::PathSpace;
    }
    switch (branch) {
        case FiberBranch::Discrete: return discrete_fiber(f, basepoint);
        case FiberBranch::CommaNerve: return comma_fiber(f, basepoint, caps);
        case FiberBranch::PathSpace: return path_fiber(f, basepoint, caps, context);
    }
    throw InputError("homotopy_fiber: unknown branch");
}

SimplicialMap induced_fiber_map(const FiberResult& A, const FiberResult& B,
                                const SimplicialMap& top, const SimplicialMap& bot,
                                const Caps& caps) {
    if (A.branch != B.branch)
        throw InputError("induced_fiber_map: fibers use different branches");
    const int D = A.space.dim();
    if (A.branch == FiberBranch::Discrete) {
        std::vector<int> where(top.target.count(0), -1);
        for (size_t i = 0; i < B.vertex_source.size(); ++i)
            where[B.vertex_source[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> lv(D + 1);
        for (int n = 0; n <= D; ++n) {
            lv[n].resize(A.space.count(n));
            for (size_t i = 0; i < A.vertex_source.size(); ++i) {
                const int img = where[top.levels[0][A.vertex_source[i]]];
                if (img < 0)
                    throw InputError("induced_fiber_map: image outside the target fiber");
                lv[n][i] = img;
            }
        }
        return {A.space, B.space, std::move(lv), std::nullopt};
    }
    if (A.branch == FiberBranch::CommaNerve) {
        if (!top.nerve_data || !bot.nerve_data)
            throw InputError("induced_fiber_map: comma branch requires nerve provenance");
        const auto& ca = *A.comma;
        const auto& cb = *B.comma;
        // object (c, g) goes to (top(c), bot(g))
        std::vector<int> obj_map(ca.objects.size());
        for (size_t i = 0; i < ca.objects.size(); ++i) {
            const int c2 = top.nerve_data->obj_map[ca.objects[i].first];
            const int g2 = bot.nerve_data->mor_map[ca.objects[i].second];
            int found = -1;
            for (size_t j = 0; j < cb.objects.size(); ++j)
                if (cb.objects[j].first == c2 && cb.objects[j].second == g2)
                    found = static_cast<int>(j);
            if (found < 0)
                throw InputError("induced_fiber_map: comma object image missing");
            obj_map[i] = found;
        }
        // morphisms carry an underlying h: c -> c'; match by endpoints + carrier image
        const auto& CA = ca.nv.category;
        const auto& CB = cb.nv.category;
        std::vector<int> mor_map(CA.num_morphisms());
        for (int m = 0; m < CA.num_morphisms(); ++m) {
            const int s2 = obj_map[CA.src(m)], t2 = obj_map[CA.tgt(m)];
            const int h2 = top.nerve_data->mor_map[ca.carriers[m]];
            int found = -1;
            for (int m2 : CB.homs(s2, t2))
                if (cb.carriers[m2] == h2)
                    found = m2;
            if (found < 0)
                throw InputError("induced_fiber_map: comma morphism image missing");
            mor_map[m] = found;
        }
        CatFunctor F(CA, CB, std::move(obj_map), std::move(mor_map));
        return nerve_map(ca.nv, cb.nv, F);
    }
    // PathSpace
    if (!A.path || !B.path)
        throw InputError("induced_fiber_map: missing path data");
    if (A.ex_used != B.ex_used)
        throw InputError("induced_fiber_map: fibers used different Ex depth");
    SimplicialMap bot_tilde = ex_k_functorial(bot, A.ex_used, caps);
    if (!bot_tilde.source.same_tables(A.path->ytilde) ||
        !bot_tilde.target.same_tables(B.path->ytilde))
        throw InputError("induced_fiber_map: Ex replacement mismatch");
    SimplicialMap post = cotensor_postcompose(A.path->paths, B.path->paths, bot_tilde);
    std::vector<std::map<std::pair<int, int>, int>> index(D + 1);
    for (int n = 0; n <= D; ++n)
        for (size_t i = 0; i < B.path->pairs[n].size(); ++i)
            index[n][B.path->pairs[n][i]] = static_cast<int>(i);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(A.space.count(n));
        for (size_t s = 0; s < A.path->pairs[n].size(); ++s) {
            auto [x, p] = A.path->pairs[n][s];
            auto it = index[n].find({top.levels[n][x], post.levels[n][p]});
            if (it == index[n].end())
                throw InputError("induced_fiber_map: path image outside target fiber");
            lv[n][s] = it->second;
        }
    }
    return {A.space, B.space, std::move(lv), std::nullopt};
}

}  // namespace branekit::simplicial
