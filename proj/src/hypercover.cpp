#include "branekit/site/hypercover.hpp"

#include <algorithm>

namespace branekit::site {

using branekit::simplicial::SimplicialSet;
namespace sp = branekit::simplicial::spaces;

namespace {

/* aug composed down from level n (any face route; routes agree by the
 * coequalizer condition, validated upstream). */
int total_augmentation(const FiniteSite& S, const AugmentedSimplicialObject& X, int n) {
    const auto& c = S.cat();
    int acc = X.augmentation;
    for (int lv = 1; lv <= n; ++lv)
        acc = c.compose(acc, X.levels.faces[lv][0]);
    return acc;
}

}  // namespace

HypercoverReport is_hypercover(const FiniteSite& S, const AugmentedSimplicialObject& X,
                               int up_to, const Caps& caps) {
    HypercoverReport rep;
    const auto& c = S.cat();
    if (up_to > X.levels.dim)
        throw InputError("is_hypercover: up_to exceeds the object's truncation");
    for (int n = 0; n <= up_to; ++n) {
        HypercoverLevel entry{n, CheckStatus::Inconclusive, ""};
        try {
            // diagram: simplices of the boundary of Delta^n valued in X-levels,
            // all anchored over the augmentation target
            SimplicialSet bd = sp::boundary_delta(n, std::max(n, 1));
            Diagram dg;
            std::vector<std::vector<int>> node_of(bd.dim() + 1);
            const int bddim = std::min(bd.dim(), X.levels.dim);
            for (int m = 0; m <= bddim; ++m) {
                node_of[m].assign(bd.count(m), -1);
                for (int z = 0; z < bd.count(m); ++z) {
                    node_of[m][z] = static_cast<int>(dg.objects.size());
                    dg.objects.push_back(X.levels.objects[m]);
                }
            }
            const int ynode = static_cast<int>(dg.objects.size());
            dg.objects.push_back(X.base);
            for (int m = 1; m <= bddim; ++m)
                for (int z = 0; z < bd.count(m); ++z)
                    for (int i = 0; i <= m; ++i)
                        dg.arrows.push_back(
                            {node_of[m][z], node_of[m - 1][bd.face(m, i, z)],
                             X.levels.faces[m][i]});
            for (int m = 0; m < bddim; ++m)
                for (int z = 0; z < bd.count(m); ++z)
                    for (int i = 0; i <= m; ++i)
                        dg.arrows.push_back(
                            {node_of[m][z], node_of[m + 1][bd.degen(m, i, z)],
                             X.levels.degens[m][i]});
            for (int m = 0; m <= bddim; ++m)
                for (int z = 0; z < bd.count(m); ++z)
                    dg.arrows.push_back({node_of[m][z], ynode, total_augmentation(S, X, m)});
            for (int m = bddim; m >= 0; --m)
                for (int z : bd.nondegenerate(m))
                    dg.order.push_back(node_of[m][z]);
            for (int m = 0; m <= bddim; ++m)
                for (int z = 0; z < bd.count(m); ++z)
                    if (bd.degenerate(m, z))
                        dg.order.push_back(node_of[m][z]);
            dg.order.push_back(ynode);

            auto cone = limit_cone(S, dg, caps);
            if (!cone) {
                entry.detail = "matching object does not exist in the site";
                rep.levels.push_back(entry);
                continue;
            }
            // the natural cone from X_n, mediated into the limit
            std::vector<int> want(dg.objects.size());
            for (int m = 0; m <= bddim; ++m) {
                auto seqs = sp::monotone_sequences(m, n);
                // boundary simplices are the non-surjective sequences, in lex order
                int idx = 0;
                for (const auto& sq : seqs) {
                    std::vector<bool> hit(n + 1, false);
                    for (int v : sq)
                        hit[v] = true;
                    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
                        continue;
                    want[node_of[m][idx]] = so_act(S, X.levels, sq, n);
                    ++idx;
                }
            }
            want[ynode] = total_augmentation(S, X, n);
            int comparison = -1, count = 0;
            for (int h : c.homs(X.levels.objects[n], cone->apex)) {
                bool ok = true;
                for (size_t v = 0; v < want.size() && ok; ++v)
                    if (c.compose(cone->legs[v], h) != want[v])
                        ok = false;
                if (ok) {
                    comparison = h;
                    ++count;
                }
            }
            if (count != 1) {
                entry.detail = "comparison morphism not unique or missing";
                rep.levels.push_back(entry);
                continue;
            }
            const int apex = cone->apex;
            if (S.covers_with_isos(apex, {comparison})) {
                entry.status = CheckStatus::Pass;
                entry.detail = c.morphism_name(comparison);
            } else {
                entry.status = CheckStatus::Fail;
                entry.detail = "comparison " + c.morphism_name(comparison) +
                               " is not a covering of " + c.object_name(apex);
            }
        } catch (const IncompleteError& e) {
            entry.status = CheckStatus::Inconclusive;
            entry.detail = e.what();
        }
        rep.levels.push_back(entry);
    }
    return rep;
}

}  // namespace branekit::site
