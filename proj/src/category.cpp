#include "branekit/category.hpp"

#include <algorithm>

namespace branekit {

FiniteCategory::FiniteCategory(std::string name, std::vector<std::string> object_names,
                               std::vector<Mor> morphisms, std::vector<std::vector<int>> comp,
                               std::vector<int> identities)
    : name_(std::move(name)),
      object_names_(std::move(object_names)),
      mors_(std::move(morphisms)),
      comp_(std::move(comp)),
      ids_(std::move(identities)) {
    const int nm = num_morphisms(), no = num_objects();
    if (static_cast<int>(ids_.size()) != no)
        throw InputError("category '" + name_ + "': identity list size mismatch");
    if (static_cast<int>(comp_.size()) != nm)
        throw InputError("category '" + name_ + "': composition table size mismatch");
    for (const auto& row : comp_)
        if (static_cast<int>(row.size()) != nm)
            throw InputError("category '" + name_ + "': ragged composition table");
    for (const auto& m : mors_)
        if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
            throw InputError("category '" + name_ + "': morphism endpoint out of range");
    for (int o = 0; o < no; ++o)
        if (ids_[o] < 0 || ids_[o] >= nm || mors_[ids_[o]].src != o || mors_[ids_[o]].tgt != o)
            throw InputError("category '" + name_ + "': bad identity for object " +
                             object_names_[o]);
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            const int c = comp_[g][f];
            if (composable(g, f)) {
                if (c < 0 || c >= nm || mors_[c].src != mors_[f].src || mors_[c].tgt != mors_[g].tgt)
                    throw InputError("category '" + name_ + "': bad composite " +
                                     mors_[g].name + " o " + mors_[f].name);
            } else if (c != -1) {
                throw InputError("category '" + name_ + "': composite declared for " +
                                 "non-composable pair");
            }
        }
}

std::vector<int> FiniteCategory::homs(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (mors_[m].src == a && mors_[m].tgt == b)
            out.push_back(m);
    return out;
}

bool FiniteCategory::is_iso(int m) const {
    return inverse(m).has_value();
}

std::optional<int> FiniteCategory::inverse(int m) const {
    for (int k : homs(tgt(m), src(m)))
        if (compose(k, m) == identity(src(m)) && compose(m, k) == identity(tgt(m)))
            return k;
    return std::nullopt;
}

bool FiniteCategory::has_initial() const {
    for (int o = 0; o < num_objects(); ++o) {
        bool ok = true;
        for (int t = 0; t < num_objects(); ++t)
            if (homs(o, t).size() != 1)
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

bool FiniteCategory::has_terminal() const {
    for (int o = 0; o < num_objects(); ++o) {
        bool ok = true;
        for (int s = 0; s < num_objects(); ++s)
            if (homs(s, o).size() != 1)
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

ValidationReport FiniteCategory::validate() const {
    ValidationReport rep;
    const int nm = num_morphisms();
    for (int f = 0; f < nm; ++f) {
        if (compose(f, identity(src(f))) != f)
            rep.fail("right identity", morphism_name(f));
        if (compose(identity(tgt(f)), f) != f)
            rep.fail("left identity", morphism_name(f));
    }
    for (int h = 0; h < nm; ++h)
        for (int g = 0; g < nm; ++g) {
            if (!composable(h, g))
                continue;
            for (int f = 0; f < nm; ++f) {
                if (!composable(g, f))
                    continue;
                if (compose(compose(h, g), f) != compose(h, compose(g, f)))
                    rep.fail("associativity", morphism_name(h) + "," + morphism_name(g) + "," +
                                                  morphism_name(f));
            }
        }
    return rep;
}

namespace cat {

FiniteCategory poset(std::string name, std::vector<std::string> object_names,
                     const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(object_names.size());
    std::vector<FiniteCategory::Mor> mors;
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq[a][b]) {
                idx[a][b] = static_cast<int>(mors.size());
                mors.push_back({a, b, object_names[a] + "<=" + object_names[b]});
            }
    const int nm = static_cast<int>(mors.size());
    std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f)
            if (mors[f].tgt == mors[g].src)
                comp[g][f] = idx[mors[f].src][mors[g].tgt];
    std::vector<int> ids(n);
    for (int o = 0; o < n; ++o)
        ids[o] = idx[o][o];
    return FiniteCategory(std::move(name), std::move(object_names), std::move(mors),
                          std::move(comp), std::move(ids));
}

FiniteCategory chain(int n) {
    std::vector<std::string> names(n + 1);
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (int a = 0; a <= n; ++a) {
        names[a] = std::to_string(a);
        for (int b = a; b <= n; ++b)
            leq[a][b] = true;
    }
    return poset("[" + std::to_string(n) + "]", std::move(names), leq);
}

FiniteCategory terminal() {
    return chain(0);
}

FiniteCategory cyclic_group(int n) {
    if (n <= 0)
        throw InputError("cyclic_group: order must be positive");
    std::vector<FiniteCategory::Mor> mors(n);
    for (int g = 0; g < n; ++g)
        mors[g] = {0, 0, "g" + std::to_string(g)};
    std::vector<std::vector<int>> comp(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f)
            comp[g][f] = (g + f) % n;
    return FiniteCategory("BZ/" + std::to_string(n), {"*"}, std::move(mors), std::move(comp),
                          {0});
}

FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b) {
    const int nob = b.num_objects(), nmb = b.num_morphisms();
    std::vector<std::string> onames(a.num_objects() * nob);
    for (int x = 0; x < a.num_objects(); ++x)
        for (int y = 0; y < nob; ++y)
            onames[x * nob + y] = "(" + a.object_name(x) + "," + b.object_name(y) + ")";
    std::vector<FiniteCategory::Mor> mors(a.num_morphisms() * nmb);
    for (int f = 0; f < a.num_morphisms(); ++f)
        for (int g = 0; g < nmb; ++g)
            mors[f * nmb + g] = {a.src(f) * nob + b.src(g), a.tgt(f) * nob + b.tgt(g),
                                 "(" + a.morphism_name(f) + "," + b.morphism_name(g) + ")"};
    const int nm = static_cast<int>(mors.size());
    std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
    for (int f2 = 0; f2 < a.num_morphisms(); ++f2)
        for (int g2 = 0; g2 < nmb; ++g2)
            for (int f1 = 0; f1 < a.num_morphisms(); ++f1)
                for (int g1 = 0; g1 < nmb; ++g1)
                    if (a.composable(f2, f1) && b.composable(g2, g1))
                        comp[f2 * nmb + g2][f1 * nmb + g1] =
                            a.compose(f2, f1) * nmb + b.compose(g2, g1);
    std::vector<int> ids(onames.size());
    for (int x = 0; x < a.num_objects(); ++x)
        for (int y = 0; y < nob; ++y)
            ids[x * nob + y] = a.identity(x) * nmb + b.identity(y);
    return FiniteCategory(a.name() + "x" + b.name(), std::move(onames), std::move(mors),
                          std::move(comp), std::move(ids));
}

}  // namespace cat

CatFunctor::CatFunctor(FiniteCategory src, FiniteCategory tgt, std::vector<int> objs,
                       std::vector<int> mors)
    : source(std::move(src)), target(std::move(tgt)), obj_map(std::move(objs)),
      mor_map(std::move(mors)) {
    if (static_cast<int>(obj_map.size()) != source.num_objects() ||
        static_cast<int>(mor_map.size()) != source.num_morphisms())
        throw InputError("functor: map sizes disagree with source category");
    for (int m = 0; m < source.num_morphisms(); ++m) {
        const int fm = mor_map[m];
        if (target.src(fm) != obj_map[source.src(m)] || target.tgt(fm) != obj_map[source.tgt(m)])
            throw InputError("functor: image of '" + source.morphism_name(m) +
                             "' has wrong endpoints");
    }
    for (int o = 0; o < source.num_objects(); ++o)
        if (mor_map[source.identity(o)] != target.identity(obj_map[o]))
            throw InputError("functor: identity of '" + source.object_name(o) + "' not preserved");
    for (int g = 0; g < source.num_morphisms(); ++g)
        for (int f = 0; f < source.num_morphisms(); ++f)
            if (source.composable(g, f) &&
                mor_map[source.compose(g, f)] != target.compose(mor_map[g], mor_map[f]))
                throw InputError("functor: composition not preserved at " +
                                 source.morphism_name(g) + " o " + source.morphism_name(f));
}

CommaCategory comma_over(const CatFunctor& F, int y) {
    const auto& C = F.source;
    const auto& D = F.target;
    std::vector<std::pair<int, int>> objs;
    for (int c = 0; c < C.num_objects(); ++c)
        for (int g : D.homs(F.obj_map[c], y))
            objs.push_back({c, g});
    const int no = static_cast<int>(objs.size());
    std::vector<std::string> onames(no);
    for (int i = 0; i < no; ++i)
        onames[i] = "(" + C.object_name(objs[i].first) + "," + D.morphism_name(objs[i].second) + ")";
    // morphisms (c,g) -> (c',g') are h: c -> c' with g' o F(h) = g
    std::vector<FiniteCategory::Mor> mors;
    std::vector<int> carrier;  // underlying morphism h of C
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j)
            for (int h : C.homs(objs[i].first, objs[j].first))
                if (D.compose(objs[j].second, F.mor_map[h]) == objs[i].second) {
                    mors.push_back({i, j, C.morphism_name(h) + "@" + std::to_string(i) + "->" +
                                              std::to_string(j)});
                    carrier.push_back(h);
                }
    const int nm = static_cast<int>(mors.size());
    std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
    for (int b = 0; b < nm; ++b)
        for (int a = 0; a < nm; ++a)
            if (mors[a].tgt == mors[b].src) {
                const int h = C.compose(carrier[b], carrier[a]);
                for (int k = 0; k < nm; ++k)
                    if (mors[k].src == mors[a].src && mors[k].tgt == mors[b].tgt &&
                        carrier[k] == h)
                        comp[b][a] = k;
            }
    std::vector<int> ids(no, -1);
    for (int k = 0; k < nm; ++k)
        if (mors[k].src == mors[k].tgt && C.is_identity(carrier[k]))
            ids[mors[k].src] = k;
    return {FiniteCategory("(" + C.name() + " over " + D.object_name(y) + ")", std::move(onames),
                           std::move(mors), std::move(comp), std::move(ids)),
            std::move(objs), std::move(carrier)};
}

}  // namespace branekit
