#include "branekit/site/simplicial_object.hpp"

#include <algorithm>
#include <array>

namespace branekit::site {

using branekit::simplicial::SimplicialSet;

ValidationReport validate(const FiniteSite& S, const SimplicialObject& X) {
    ValidationReport rep;
    const auto& c = S.cat();
    const int D = X.dim;
    auto typed = [&](int m, int from, int to) {
        return c.src(m) == from && c.tgt(m) == to;
    };
    for (int n = 1; n <= D; ++n) {
        if (static_cast<int>(X.faces[n].size()) != n + 1)
            rep.fail("face count", std::to_string(n));
        for (int i = 0; i <= n; ++i)
            if (!typed(X.faces[n][i], X.objects[n], X.objects[n - 1]))
                rep.fail("face typing", "d_" + std::to_string(i) + " at " + std::to_string(n));
    }
    for (int n = 0; n < D; ++n)
        for (int i = 0; i <= n; ++i)
            if (!typed(X.degens[n][i], X.objects[n], X.objects[n + 1]))
                rep.fail("degeneracy typing",
                         "s_" + std::to_string(i) + " at " + std::to_string(n));
    if (!rep.ok())
        return rep;
    for (int n = 2; n <= D; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (c.compose(X.faces[n - 1][i], X.faces[n][j]) !=
                    c.compose(X.faces[n - 1][j - 1], X.faces[n][i]))
                    rep.fail("d_i d_j identity",
                             "i=" + std::to_string(i) + " j=" + std::to_string(j) + " n=" +
                                 std::to_string(n));
    for (int n = 0; n + 2 <= D; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (c.compose(X.degens[n + 1][i], X.degens[n][j]) !=
                    c.compose(X.degens[n + 1][j + 1], X.degens[n][i]))
                    rep.fail("s_i s_j identity",
                             "i=" + std::to_string(i) + " j=" + std::to_string(j));
    for (int n = 0; n + 1 <= D; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const int got = c.compose(X.faces[n + 1][i], X.degens[n][j]);
                int want;
                if (i == j || i == j + 1)
                    want = c.identity(X.objects[n]);
                else if (i < j)
                    want = n >= 1 ? c.compose(X.degens[n - 1][j - 1], X.faces[n][i]) : -2;
                else
                    want = n >= 1 ? c.compose(X.degens[n - 1][j], X.faces[n][i - 1]) : -2;
                if (want != -2 && got != want)
                    rep.fail("d_i s_j identity",
                             "i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
    return rep;
}

SimplicialObject constant_object(const FiniteSite& S, int obj, int dim) {
    const int id = S.cat().identity(obj);
    SimplicialObject X;
    X.dim = dim;
    X.objects.assign(dim + 1, obj);
    X.faces.resize(dim + 1);
    X.degens.resize(std::max(dim, 0));
    for (int n = 1; n <= dim; ++n)
        X.faces[n].assign(n + 1, id);
    for (int n = 0; n < dim; ++n)
        X.degens[n].assign(n + 1, id);
    return X;
}

int so_act(const FiniteSite& S, const SimplicialObject& X, const std::vector<int>& alpha,
           int n) {
    const auto& c = S.cat();
    const int m = static_cast<int>(alpha.size()) - 1;
    std::vector<int> a = alpha;
    int acc = c.identity(X.objects[n]);
    int ncur = n;
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
        acc = c.compose(X.faces[ncur][miss], acc);
        --ncur;
        for (int& v : a)
            if (v > miss)
                --v;
    }
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
        acc = c.compose(X.degens[ncur][*it], acc);
        ++ncur;
    }
    if (ncur != m)
        throw InputError("so_act: internal level mismatch");
    return acc;
}

namespace {

/* Fold coproducts of `count` copies of obj; returns the apex and injections. */
std::pair<int, std::vector<int>> fold_copower(const FiniteSite& S, int obj, int count) {
    const auto& c = S.cat();
    if (count <= 0)
        throw IncompleteError("tensor: empty level needs an initial object");
    int apex = obj;
    std::vector<int> inj = {c.identity(obj)};
    for (int k = 1; k < count; ++k) {
        const auto& cp = S.coproduct(apex, obj);
        for (int& m : inj)
            m = c.compose(cp.inj1, m);
        inj.push_back(cp.inj2);
        apex = cp.obj;
    }
    return {apex, std::move(inj)};
}

/* The unique mediating morphism apex -> target with given leg equations. */
int mediate_from_copower(const FiniteSite& S, int apex, const std::vector<int>& inj, int target,
                         const std::vector<int>& legs) {
    const auto& c = S.cat();
    int found = -1, count = 0;
    for (int h : c.homs(apex, target)) {
        bool ok = true;
        for (size_t k = 0; k < inj.size() && ok; ++k)
            if (c.compose(h, inj[k]) != legs[k])
                ok = false;
        if (ok) {
            found = h;
            ++count;
        }
    }
    if (count == 0)
        throw IncompleteError("tensor: no mediating morphism out of a coproduct");
    if (count > 1)
        throw InputError("tensor: mediating morphism not unique; coproduct data invalid");
    return found;
}

}  // namespace

SimplicialObject tensor(const FiniteSite& S, const SimplicialSet& K, const SimplicialObject& Y) {
    const int D = std::min(K.dim(), Y.dim);
    SimplicialObject T;
    T.dim = D;
    T.objects.resize(D + 1);
    T.faces.resize(D + 1);
    T.degens.resize(std::max(D, 0));
    std::vector<std::vector<int>> inj(D + 1);
    for (int n = 0; n <= D; ++n) {
        auto [apex, injections] = fold_copower(S, Y.objects[n], K.count(n));
        T.objects[n] = apex;
        inj[n] = std::move(injections);
    }
    for (int n = 1; n <= D; ++n) {
        T.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> legs(K.count(n));
            for (int k = 0; k < K.count(n); ++k)
                legs[k] = S.cat().compose(inj[n - 1][K.face(n, i, k)], Y.faces[n][i]);
            T.faces[n][i] = mediate_from_copower(S, T.objects[n], inj[n], T.objects[n - 1], legs);
        }
    }
    for (int n = 0; n < D; ++n) {
        T.degens[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> legs(K.count(n));
            for (int k = 0; k < K.count(n); ++k)
                legs[k] = S.cat().compose(inj[n + 1][K.degen(n, i, k)], Y.degens[n][i]);
            T.degens[n][i] = mediate_from_copower(S, T.objects[n], inj[n], T.objects[n + 1], legs);
        }
    }
    return T;
}

std::optional<Cone> limit_cone(const FiniteSite& S, const Diagram& dg, const Caps& caps) {
    const auto& c = S.cat();
    const int nn = static_cast<int>(dg.objects.size());
    std::vector<int> order = dg.order;
    if (order.empty()) {
        order.resize(nn);
        for (int i = 0; i < nn; ++i)
            order[i] = i;
    }
    // arrows indexed by endpoint for quick constraint lookup
    std::vector<std::vector<std::array<int, 2>>> into(nn), out_of(nn);  // (other node, morphism)
    for (const auto& ar : dg.arrows) {
        out_of[ar[0]].push_back({ar[1], ar[2]});
        into[ar[1]].push_back({ar[0], ar[2]});
    }
    long budget = caps.map_search_nodes;
    std::vector<Cone> cones;
    std::vector<int> legs(nn, -1);
    std::vector<int> pos_of(nn);
    for (int p = 0; p < nn; ++p)
        pos_of[order[p]] = p;

    std::function<void(int, int)> search = [&](int apex, int p) {
        if (--budget < 0)
            throw CapError("limit_cone: search budget exceeded");
        if (p == nn) {
            cones.push_back({apex, legs});
            return;
        }
        const int v = order[p];
        // candidates: forced by any arrow from an assigned node, else all homs
        std::vector<int> cands;
        bool forced = false;
        for (const auto& [u, m] : into[v])
            if (legs[u] >= 0) {
                const int val = c.compose(m, legs[u]);
                if (!forced) {
                    cands = {val};
                    forced = true;
                } else if (cands[0] != val) {
                    return;
                }
            }
        if (!forced)
            cands = c.homs(apex, dg.objects[v]);
        for (int cand : cands) {
            bool ok = true;
            for (const auto& [u, m] : into[v])
                if (legs[u] >= 0 && c.compose(m, legs[u]) != cand)
                    ok = false;
            for (const auto& [u, m] : out_of[v])
                if (legs[u] >= 0 && c.compose(m, cand) != legs[u])
                    ok = false;
            if (!ok)
                continue;
            legs[v] = cand;
            search(apex, p + 1);
            legs[v] = -1;
        }
    };

    std::vector<std::vector<Cone>> by_apex(c.num_objects());
    for (int apex = 0; apex < c.num_objects(); ++apex) {
        cones.clear();
        std::fill(legs.begin(), legs.end(), -1);
        search(apex, 0);
        by_apex[apex] = cones;
    }
    // universal cone: every cone factors through it uniquely
    for (int apex = 0; apex < c.num_objects(); ++apex) {
        for (const auto& cand : by_apex[apex]) {
            bool universal = true;
            for (int t = 0; t < c.num_objects() && universal; ++t)
                for (const auto& other : by_apex[t]) {
                    int count = 0;
                    for (int w : c.homs(t, apex)) {
                        bool match = true;
                        for (int v = 0; v < nn && match; ++v)
                            if (c.compose(cand.legs[v], w) != other.legs[v])
                                match = false;
                        if (match)
                            ++count;
                    }
                    if (count != 1) {
                        universal = false;
                        break;
                    }
                }
            if (universal)
                return cand;
        }
    }
    return std::nullopt;
}

CotensorLevel cotensor_level(const FiniteSite& S, const SimplicialObject& X,
                             const SimplicialSet& K, const Caps& caps) {
    const int D = std::min(X.dim, K.dim());
    Diagram dg;
    std::vector<std::pair<int, int>> nodes;
    std::vector<std::vector<int>> node_of(D + 1);
    for (int n = 0; n <= D; ++n) {
        node_of[n].assign(K.count(n), -1);
        for (int z = 0; z < K.count(n); ++z) {
            node_of[n][z] = static_cast<int>(nodes.size());
            nodes.push_back({n, z});
            dg.objects.push_back(X.objects[n]);
        }
    }
    for (int n = 1; n <= D; ++n)
        for (int z = 0; z < K.count(n); ++z)
            for (int i = 0; i <= n; ++i)
                dg.arrows.push_back(
                    {node_of[n][z], node_of[n - 1][K.face(n, i, z)], X.faces[n][i]});
    for (int n = 0; n < D; ++n)
        for (int z = 0; z < K.count(n); ++z)
            for (int i = 0; i <= n; ++i)
                dg.arrows.push_back(
                    {node_of[n][z], node_of[n + 1][K.degen(n, i, z)], X.degens[n][i]});
    // assignment order: nondegenerate top-down, then degenerate bottom-up
    for (int n = D; n >= 0; --n)
        for (int z : K.nondegenerate(n))
            dg.order.push_back(node_of[n][z]);
    for (int n = 0; n <= D; ++n)
        for (int z = 0; z < K.count(n); ++z)
            if (K.degenerate(n, z))
                dg.order.push_back(node_of[n][z]);
    auto cone = limit_cone(S, dg, caps);
    if (!cone)
        throw IncompleteError("cotensor_level: the site lacks the required limit");
    return {*cone, std::move(nodes)};
}

ValidationReport validate(const FiniteSite& S, const AugmentedSimplicialObject& X) {
    ValidationReport rep = validate(S, X.levels);
    const auto& c = S.cat();
    if (c.src(X.augmentation) != X.levels.objects[0] || c.tgt(X.augmentation) != X.base)
        rep.fail("augmentation typing", c.morphism_name(X.augmentation));
    else if (X.levels.dim >= 1 &&
             c.compose(X.augmentation, X.levels.faces[1][0]) !=
                 c.compose(X.augmentation, X.levels.faces[1][1]))
        rep.fail("augmentation does not coequalize d_0, d_1", "level 1");
    return rep;
}

AugmentedSimplicialObject cech_nerve(const FiniteSite& S, int u, int up_to, const Caps& caps) {
    (void)caps;
    const auto& c = S.cat();
    const int U = c.src(u), X = c.tgt(u);
    SimplicialObject so;
    so.dim = up_to;
    so.objects.resize(up_to + 1);
    so.faces.resize(up_to + 1);
    so.degens.resize(std::max(up_to, 0));
    // iterated fiber powers with projections pi[n][i]: X_n -> U and q[n]: X_n -> X
    std::vector<std::vector<int>> pi(up_to + 1);
    std::vector<int> q(up_to + 1);
    so.objects[0] = U;
    pi[0] = {c.identity(U)};
    q[0] = u;
    for (int n = 1; n <= up_to; ++n) {
        const auto& pb = S.pullback(q[n - 1], u);
        so.objects[n] = pb.apex;
        pi[n].resize(n + 1);
        for (int i = 0; i < n; ++i)
            pi[n][i] = c.compose(pi[n - 1][i], pb.p1);
        pi[n][n] = pb.p2;
        q[n] = c.compose(q[n - 1], pb.p1);
    }
    // mediate structure morphisms by their projection patterns
    auto mediate = [&](int from, int to, const std::vector<int>& want_pi, int want_q) {
        int found = -1, count = 0;
        for (int h : c.homs(so.objects[from], so.objects[to])) {
            bool ok = c.compose(q[to], h) == want_q;
            for (size_t i = 0; i < want_pi.size() && ok; ++i)
                if (c.compose(pi[to][i], h) != want_pi[i])
                    ok = false;
            if (ok) {
                found = h;
                ++count;
            }
        }
        if (count != 1)
            throw IncompleteError("cech_nerve: mediating morphism not unique or missing");
        return found;
    };
    for (int n = 1; n <= up_to; ++n) {
        so.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> want(n);
            for (int j = 0; j < n; ++j)
                want[j] = pi[n][j + (j >= i ? 1 : 0)];
            so.faces[n][i] = mediate(n, n - 1, want, q[n]);
        }
    }
    for (int n = 0; n < up_to; ++n) {
        so.degens[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> want(n + 2);
            for (int j = 0; j <= n + 1; ++j)
                want[j] = pi[n][j - (j > i ? 1 : 0)];
            so.degens[n][i] = mediate(n, n + 1, want, q[n]);
        }
    }
    return {std::move(so), X, u};
}

}  // namespace branekit::site
