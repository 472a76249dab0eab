#include "branekit/site/topology.hpp"

#include <algorithm>
#include <functional>

namespace branekit::site {

TopologyReport check_topology_axioms(const FiniteSite& S, const Caps& caps) {
    TopologyReport rep;
    const auto& c = S.cat();

    // (i) isomorphisms cover
    {
        AxiomReportEntry e{"isomorphisms_cover", CheckStatus::Pass, ""};
        for (int m = 0; m < c.num_morphisms() && e.status == CheckStatus::Pass; ++m)
            if (c.is_iso(m) && !S.is_cover(c.tgt(m), {m})) {
                e.status = CheckStatus::Fail;
                e.witness = "iso " + c.morphism_name(m) + " is not a declared cover of " +
                            c.object_name(c.tgt(m));
            }
        rep.entries.push_back(e);
    }

    // (ii) stability under composition: refine each member of a cover by a cover
    {
        AxiomReportEntry e{"composition_stability", CheckStatus::Pass, ""};
        long budget = caps.map_search_nodes;
        for (int obj = 0; obj < c.num_objects() && e.status == CheckStatus::Pass; ++obj)
            for (const auto& fam : S.covers(obj)) {
                if (e.status != CheckStatus::Pass)
                    break;
                // iterate over one choice of refining cover per member
                std::vector<int> choice(fam.size(), 0);
                while (true) {
                    if (--budget < 0)
                        throw CapError("composition_stability: search budget exceeded");
                    CoverFamily comp;
                    bool usable = true;
                    for (size_t i = 0; i < fam.size() && usable; ++i) {
                        const auto& fams_i = S.covers(c.src(fam[i]));
                        if (fams_i.empty()) {
                            usable = false;
                            break;
                        }
                        for (int g : fams_i[choice[i]])
                            comp.push_back(c.compose(fam[i], g));
                    }
                    if (usable) {
                        std::sort(comp.begin(), comp.end());
                        comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
                        if (!S.is_cover(obj, comp)) {
                            e.status = CheckStatus::Fail;
                            e.witness = "composite refinement of a cover of " +
                                        c.object_name(obj) + " is not a cover";
                            break;
                        }
                    }
                    // next choice vector
                    int k = static_cast<int>(fam.size()) - 1;
                    while (k >= 0) {
                        const auto& fams_k = S.covers(c.src(fam[k]));
                        if (++choice[k] < static_cast<int>(fams_k.size()))
                            break;
                        choice[k--] = 0;
                    }
                    if (k < 0)
                        break;
                }
            }
        rep.entries.push_back(e);
    }

    // (iii) stability under pullback
    {
        AxiomReportEntry e{"pullback_stability", CheckStatus::Pass, ""};
        for (int obj = 0; obj < c.num_objects() && e.status == CheckStatus::Pass; ++obj)
            for (const auto& fam : S.covers(obj)) {
                if (e.status != CheckStatus::Pass)
                    break;
                for (int g = 0; g < c.num_morphisms(); ++g) {
                    if (c.tgt(g) != obj)
                        continue;
                    CoverFamily pulled;
                    for (int f : fam)
                        pulled.push_back(S.pullback(f, g).p2);
                    std::sort(pulled.begin(), pulled.end());
                    pulled.erase(std::unique(pulled.begin(), pulled.end()), pulled.end());
                    if (!S.is_cover(c.src(g), pulled)) {
                        e.status = CheckStatus::Fail;
                        e.witness = "pullback of a cover of " + c.object_name(obj) + " along " +
                                    c.morphism_name(g) + " is not a cover of " +
                                    c.object_name(c.src(g));
                        break;
                    }
                }
            }
        rep.entries.push_back(e);
    }
    return rep;
}

FiniteSite image_site(const FiniteSite& src, const FiniteSite& tgt,
                      const std::vector<int>& obj_map, const std::vector<int>& mor_map) {
    const auto& cs = src.cat();
    const auto& ct = tgt.cat();
    std::vector<int> objs, mors;  // target ids in the image, deduplicated
    std::vector<int> obj_new(ct.num_objects(), -1), mor_new(ct.num_morphisms(), -1);
    for (int o = 0; o < cs.num_objects(); ++o)
        if (obj_new[obj_map[o]] < 0) {
            obj_new[obj_map[o]] = static_cast<int>(objs.size());
            objs.push_back(obj_map[o]);
        }
    for (int m = 0; m < cs.num_morphisms(); ++m)
        if (mor_new[mor_map[m]] < 0) {
            mor_new[mor_map[m]] = static_cast<int>(mors.size());
            mors.push_back(mor_map[m]);
        }
    std::vector<std::string> onames(objs.size());
    for (size_t i = 0; i < objs.size(); ++i)
        onames[i] = ct.object_name(objs[i]);
    std::vector<FiniteCategory::Mor> ms(mors.size());
    for (size_t i = 0; i < mors.size(); ++i)
        ms[i] = {obj_new[ct.src(mors[i])], obj_new[ct.tgt(mors[i])], ct.morphism_name(mors[i])};
    std::vector<std::vector<int>> comp(mors.size(), std::vector<int>(mors.size(), -1));
    for (size_t g = 0; g < mors.size(); ++g)
        for (size_t f = 0; f < mors.size(); ++f)
            if (ct.composable(mors[g], mors[f])) {
                const int cm = ct.compose(mors[g], mors[f]);
                if (mor_new[cm] < 0)
                    throw InputError("image_site: image morphisms not closed under composition");
                comp[g][f] = mor_new[cm];
            }
    std::vector<int> ids(objs.size(), -1);
    for (size_t i = 0; i < objs.size(); ++i) {
        const int idm = ct.identity(objs[i]);
        if (mor_new[idm] < 0)
            throw InputError("image_site: identity missing from image");
        ids[i] = mor_new[idm];
    }
    FiniteCategory ic("im(" + cs.name() + ")", std::move(onames), std::move(ms), std::move(comp),
                      std::move(ids));
    // transported pullbacks and coproducts
    std::map<std::pair<int, int>, PullbackData> pbs;
    for (const auto& [key, pb] : src.all_pullbacks()) {
        auto [f, g] = key;
        pbs[{mor_new[mor_map[f]], mor_new[mor_map[g]]}] = {obj_new[obj_map[pb.apex]],
                                                           mor_new[mor_map[pb.p1]],
                                                           mor_new[mor_map[pb.p2]]};
    }
    std::map<std::pair<int, int>, CoproductData> cps;
    for (const auto& [key, cp] : src.all_coproducts()) {
        auto [a, b] = key;
        cps[{obj_new[obj_map[a]], obj_new[obj_map[b]]}] = {obj_new[obj_map[cp.obj]],
                                                           mor_new[mor_map[cp.inj1]],
                                                           mor_new[mor_map[cp.inj2]]};
    }
    // transported covers: exactly the images of source covering families
    std::vector<std::vector<CoverFamily>> covers(ic.num_objects());
    for (int o = 0; o < cs.num_objects(); ++o)
        for (const auto& fam : src.covers(o)) {
            CoverFamily img;
            for (int m : fam)
                img.push_back(mor_new[mor_map[m]]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            auto& dst = covers[obj_new[obj_map[o]]];
            if (std::find(dst.begin(), dst.end(), img) == dst.end())
                dst.push_back(img);
        }
    std::vector<FactorizationData> fact(ic.num_morphisms());
    std::vector<bool> have(ic.num_morphisms(), false);
    for (int m = 0; m < cs.num_morphisms(); ++m) {
        const int im = mor_new[mor_map[m]];
        if (have[im])
            continue;
        const auto& fa = src.factorization(m);
        fact[im] = {obj_new[obj_map[fa.mid]], mor_new[mor_map[fa.left]],
                    mor_new[mor_map[fa.right]]};
        have[im] = true;
    }
    std::vector<std::string> labels(ic.num_objects());
    for (size_t i = 0; i < objs.size(); ++i)
        labels[i] = tgt.ring_label(objs[i]);
    return FiniteSite(std::move(ic), std::move(pbs), std::move(cps), std::move(covers),
                      std::move(fact), std::move(labels));
}

}  // namespace branekit::site
