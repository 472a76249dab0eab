#include "branekit/functors/checks.hpp"

#include <algorithm>
#include <random>

#include "branekit/algebra/homs.hpp"

namespace branekit::functors {

namespace sp = simplicial::spaces;
using site::CoverFamily;

std::vector<std::pair<std::string, const AxiomVerdict*>> AxiomReport::entries() const {
    return {{"preserves_covers", &preserves_covers},
            {"reflects_covers", &reflects_covers},
            {"preserves_pullbacks", &preserves_pullbacks},
            {"preserves_factorizations", &preserves_factorizations},
            {"setdelta_equivariance", &setdelta_equivariance},
            {"exponential_lemma", &exponential_lemma},
            {"preserves_hfp", &preserves_hfp},
            {"preserves_hypercovers", &preserves_hypercovers},
            {"descent", &descent}};
}

std::vector<std::string> AxiomReport::failed_axioms() const {
    std::vector<std::string> out;
    for (const auto& [name, v] : entries())
        if (v->status == CheckStatus::Fail)
            out.push_back(name);
    return out;
}

bool AxiomReport::consequence_violation() const {
    const bool hfp_ready = preserves_pullbacks.status == CheckStatus::Pass &&
                           preserves_factorizations.status == CheckStatus::Pass;
    if (hfp_ready && preserves_hfp.status == CheckStatus::Fail)
        return true;
    const bool hc_ready = preserves_covers.status == CheckStatus::Pass &&
                          preserves_hfp.status == CheckStatus::Pass &&
                          setdelta_equivariance.status == CheckStatus::Pass;
    if (hc_ready && preserves_hypercovers.status == CheckStatus::Fail)
        return true;
    if (setdelta_equivariance.status == CheckStatus::Pass &&
        exponential_lemma.status == CheckStatus::Fail)
        return true;
    return false;
}

namespace {

bool iso_objects(const FiniteCategory& c, int a, int b) {
    if (a == b)
        return true;
    for (int m : c.homs(a, b))
        if (c.is_iso(m))
            return true;
    return false;
}

std::vector<int> image_family(const EnergyFunctor& E, const CoverFamily& fam) {
    CoverFamily img;
    for (int m : fam)
        img.push_back(E.mor_map[m]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

std::string family_name(const FiniteCategory& c, const CoverFamily& fam) {
    std::string s = "{";
    for (size_t i = 0; i < fam.size(); ++i)
        s += (i ? ", " : "") + c.morphism_name(fam[i]);
    return s + "}";
}

}  // namespace

AxiomVerdict check_preserves_covers(const EnergyFunctor& E) {
    const auto& cs = E.source.cat();
    for (int obj = 0; obj < cs.num_objects(); ++obj)
        for (const auto& fam : E.source.covers(obj)) {
            auto img = image_family(E, fam);
            if (!E.target.is_cover(E.obj_map[obj], img))
                return {CheckStatus::Fail,
                        "cover " + family_name(cs, fam) + " of " + cs.object_name(obj) +
                            " maps to non-cover " + family_name(E.target.cat(), img)};
        }
    return {CheckStatus::Pass, ""};
}

AxiomVerdict check_reflects_covers(const EnergyFunctor& E) {
    const auto& cs = E.source.cat();
    const auto& ct = E.target.cat();
    // single maps: {E f} covering forces {f} covering
    for (int f = 0; f < cs.num_morphisms(); ++f) {
        if (E.target.is_cover(ct.tgt(E.mor_map[f]), {E.mor_map[f]}) &&
            !E.source.is_cover(cs.tgt(f), {f}))
            return {CheckStatus::Fail,
                    "{" + ct.morphism_name(E.mor_map[f]) + "} covers but {" +
                        cs.morphism_name(f) + "} does not"};
    }
    // full preimages of covering target families
    for (int y = 0; y < cs.num_objects(); ++y) {
        const int ey = E.obj_map[y];
        for (const auto& gfam : E.target.covers(ey)) {
            CoverFamily pre;
            for (int f = 0; f < cs.num_morphisms(); ++f)
                if (cs.tgt(f) == y &&
                    std::find(gfam.begin(), gfam.end(), E.mor_map[f]) != gfam.end())
                    pre.push_back(f);
            if (pre.empty())
                continue;
            if (image_family(E, pre) != gfam)
                continue;  // family not fully hit from y
            if (!E.source.is_cover(y, pre))
                return {CheckStatus::Fail,
                        "preimage " + family_name(cs, pre) + " of cover " +
                            family_name(ct, gfam) + " does not cover " + cs.object_name(y)};
        }
    }
    return {CheckStatus::Pass, ""};
}

AxiomVerdict check_preserves_pullbacks(const EnergyFunctor& E) {
    const auto& cs = E.source.cat();
    const auto& ct = E.target.cat();
    for (const auto& [key, pb] : E.source.all_pullbacks()) {
        auto [f, g] = key;
        const std::string w = "cospan (" + cs.morphism_name(f) + ", " + cs.morphism_name(g) + ")";
        if (!E.target.has_pullback(E.mor_map[f], E.mor_map[g]))
            throw IncompleteError("preserves_pullbacks: target lacks the pullback of the image " +
                                  w);
        const auto& tpb = E.target.pullback(E.mor_map[f], E.mor_map[g]);
        // canonical comparison E(apex) -> target apex
        int comparison = -1, count = 0;
        for (int h : ct.homs(E.obj_map[pb.apex], tpb.apex))
            if (ct.compose(tpb.p1, h) == E.mor_map[pb.p1] &&
                ct.compose(tpb.p2, h) == E.mor_map[pb.p2]) {
                comparison = h;
                ++count;
            }
        if (count != 1 || !ct.is_iso(comparison))
            return {CheckStatus::Fail, w + ": comparison to the image pullback is not an iso"};
    }
    return {CheckStatus::Pass, ""};
}

AxiomVerdict check_preserves_factorizations(const EnergyFunctor& E) {
    const auto& cs = E.source.cat();
    for (int f = 0; f < cs.num_morphisms(); ++f) {
        const auto& fa = E.source.factorization(f);
        const auto& fb = E.target.factorization(E.mor_map[f]);
        if (E.obj_map[fa.mid] != fb.mid || E.mor_map[fa.left] != fb.left ||
            E.mor_map[fa.right] != fb.right)
            return {CheckStatus::Fail,
                    "factorization of " + cs.morphism_name(f) +
                        " is not sent to the declared factorization of its image"};
    }
    return {CheckStatus::Pass, ""};
}

std::vector<EquivarianceSample> default_samples(const FiniteSite& src, std::uint64_t seed,
                                                int max_samples, const Caps& caps) {
    std::vector<EquivarianceSample> out;
    const int kdim = 2;
    std::vector<std::pair<std::string, simplicial::SimplicialSet>> ks;
    ks.push_back({"Delta0", sp::delta(0, kdim)});
    ks.push_back({"Delta1", sp::delta(1, kdim)});
    ks.push_back({"bDelta1", sp::boundary_delta(1, kdim)});
    ks.push_back({"Delta2", sp::delta(2, kdim)});
    std::vector<std::pair<std::string, site::SimplicialObject>> as;
    for (int o = 0; o < src.cat().num_objects(); ++o)
        as.push_back({"const(" + src.cat().object_name(o) + ")",
                      site::constant_object(src, o, kdim)});
    for (int obj = 0; obj < src.cat().num_objects(); ++obj)
        for (const auto& fam : src.covers(obj))
            if (fam.size() == 1 && !src.cat().is_identity(fam[0])) {
                try {
                    auto cech = site::cech_nerve(src, fam[0], kdim, caps);
                    as.push_back({"cech(" + src.cat().morphism_name(fam[0]) + ")",
                                  std::move(cech.levels)});
                } catch (const IncompleteError&) {
                }
            }
    for (const auto& [kn, k] : ks)
        for (const auto& [an, a] : as)
            out.push_back({kn + " x " + an, k, a});
    std::mt19937_64 rng(seed);
    std::shuffle(out.begin(), out.end(), rng);
    if (max_samples >= 0 && static_cast<int>(out.size()) > max_samples)
        out.erase(out.begin() + max_samples, out.end());
    // stable report order regardless of the seed's shuffle
    std::sort(out.begin(), out.end(),
              [](const EquivarianceSample& x, const EquivarianceSample& y) {
                  return x.name < y.name;
              });
    return out;
}

AxiomVerdict check_setdelta_equivariance(const EnergyFunctor& E,
                                         const std::vector<EquivarianceSample>& samples,
                                         const Caps& caps) {
    int checked = 0;
    for (const auto& s : samples) {
        site::SimplicialObject lhs, rhs;
        try {
            lhs = E.map_object(site::tensor(E.source, s.K, s.A));
            rhs = site::tensor(E.target, s.K, E.map_object(s.A));
        } catch (const IncompleteError&) {
            continue;
        }
        ++checked;
        for (int n = 0; n <= lhs.dim; ++n)
            if (!iso_objects(E.target.cat(), lhs.objects[n], rhs.objects[n]))
                return {CheckStatus::Fail,
                        "sample " + s.name + ": level " + std::to_string(n) + " gives " +
                            E.target.cat().object_name(lhs.objects[n]) + " vs " +
                            E.target.cat().object_name(rhs.objects[n])};
        (void)caps;
    }
    if (checked == 0)
        return {CheckStatus::Inconclusive, "no computable samples"};
    return {CheckStatus::Pass, std::to_string(checked) + " samples"};
}

AxiomVerdict check_exponential_lemma(const EnergyFunctor& E,
                                     const std::vector<EquivarianceSample>& samples,
                                     const Caps& caps) {
    int checked = 0;
    for (const auto& s : samples) {
        int lhs, rhs;
        try {
            lhs = E.obj_map[site::cotensor_level(E.source, s.A, s.K, caps).cone.apex];
            rhs = site::cotensor_level(E.target, E.map_object(s.A), s.K, caps).cone.apex;
        } catch (const IncompleteError&) {
            continue;
        }
        ++checked;
        if (!iso_objects(E.target.cat(), lhs, rhs))
            return {CheckStatus::Fail,
                    "sample " + s.name + ": E(A^K) = " + E.target.cat().object_name(lhs) +
                        " vs (EA)^K = " + E.target.cat().object_name(rhs)};
    }
    if (checked == 0)
        return {CheckStatus::Inconclusive, "no computable samples"};
    return {CheckStatus::Pass, std::to_string(checked) + " samples"};
}

AxiomVerdict check_preserves_hfp(const EnergyFunctor& E, const Caps& caps) {
    (void)caps;
    const auto& cs = E.source.cat();
    const auto& ct = E.target.cat();
    int checked = 0;
    for (const auto& [key, unused] : E.source.all_pullbacks()) {
        (void)unused;
        auto [f, g] = key;
        const std::string w = "cospan (" + cs.morphism_name(f) + ", " + cs.morphism_name(g) + ")";
        // source-side homotopy fiber product through the declared factorizations
        const auto& faf = E.source.factorization(f);
        const auto& fag = E.source.factorization(g);
        if (!E.source.has_pullback(faf.right, fag.right))
            continue;
        const auto& hsrc = E.source.pullback(faf.right, fag.right);
        // target side through the target factorizations of the images
        const auto& fbf = E.target.factorization(E.mor_map[f]);
        const auto& fbg = E.target.factorization(E.mor_map[g]);
        if (!E.target.has_pullback(fbf.right, fbg.right))
            throw IncompleteError("preserves_hfp: target lacks the factored pullback of " + w);
        const auto& htgt = E.target.pullback(fbf.right, fbg.right);
        if (E.obj_map[faf.mid] != fbf.mid || E.obj_map[fag.mid] != fbg.mid)
            return {CheckStatus::Fail,
                    w + ": factorization middles disagree, no canonical comparison"};
        int comparison = -1, count = 0;
        for (int h : ct.homs(E.obj_map[hsrc.apex], htgt.apex))
            if (ct.compose(htgt.p1, h) == E.mor_map[hsrc.p1] &&
                ct.compose(htgt.p2, h) == E.mor_map[hsrc.p2]) {
                comparison = h;
                ++count;
            }
        if (count != 1 || !ct.is_iso(comparison))
            return {CheckStatus::Fail,
                    w + ": comparison of homotopy fiber products is not an iso"};
        ++checked;
    }
    if (checked == 0)
        return {CheckStatus::Inconclusive, "no computable cospans"};
    return {CheckStatus::Pass, std::to_string(checked) + " cospans"};
}

AxiomVerdict check_preserves_hypercovers(const EnergyFunctor& E, int up_to, const Caps& caps) {
    int checked = 0;
    const auto& cs = E.source.cat();
    for (int obj = 0; obj < cs.num_objects(); ++obj)
        for (const auto& fam : E.source.covers(obj)) {
            if (fam.size() != 1)
                continue;
            site::AugmentedSimplicialObject sample{{}, 0, 0};
            try {
                sample = site::cech_nerve(E.source, fam[0], up_to, caps);
            } catch (const IncompleteError&) {
                continue;
            }
            auto pre = site::is_hypercover(E.source, sample, up_to, caps);
            if (!pre.ok())
                continue;  // not a hypercover upstream; not this functor's concern
            auto post = site::is_hypercover(E.target, E.map_object(sample), up_to, caps);
            ++checked;
            for (const auto& lv : post.levels) {
                if (lv.status == CheckStatus::Fail)
                    return {CheckStatus::Fail,
                            "cech(" + cs.morphism_name(fam[0]) + ") image fails at level " +
                                std::to_string(lv.level) + ": " + lv.detail};
                if (lv.status == CheckStatus::Inconclusive)
                    return {CheckStatus::Inconclusive,
                            "cech(" + cs.morphism_name(fam[0]) + ") image level " +
                                std::to_string(lv.level) + " inconclusive: " + lv.detail};
            }
        }
    if (checked == 0)
        return {CheckStatus::Inconclusive, "no hypercover samples"};
    return {CheckStatus::Pass, std::to_string(checked) + " hypercovers"};
}

AxiomReport run_axiom_suite(const EnergyFunctor& E, std::uint64_t seed, int up_to,
                            const Caps& caps) {
    AxiomReport rep;
    rep.preserves_covers = check_preserves_covers(E);
    rep.reflects_covers = check_reflects_covers(E);
    try {
        rep.preserves_pullbacks = check_preserves_pullbacks(E);
    } catch (const IncompleteError& e) {
        rep.preserves_pullbacks = {CheckStatus::Inconclusive, e.what()};
    }
    rep.preserves_factorizations = check_preserves_factorizations(E);
    auto samples = default_samples(E.source, seed, 12, caps);
    rep.setdelta_equivariance = check_setdelta_equivariance(E, samples, caps);

    if (rep.setdelta_equivariance.status == CheckStatus::Pass)
        rep.exponential_lemma = check_exponential_lemma(E, samples, caps);
    else
        rep.exponential_lemma = {CheckStatus::Skipped,
                                 "prerequisite failed: setdelta_equivariance"};

    if (rep.preserves_pullbacks.status == CheckStatus::Pass &&
        rep.preserves_factorizations.status == CheckStatus::Pass) {
        try {
            rep.preserves_hfp = check_preserves_hfp(E, caps);
        } catch (const IncompleteError& e) {
            rep.preserves_hfp = {CheckStatus::Inconclusive, e.what()};
        }
    } else {
        std::string which = rep.preserves_pullbacks.status != CheckStatus::Pass
                                ? "preserves_pullbacks"
                                : "preserves_factorizations";
        rep.preserves_hfp = {CheckStatus::Skipped, "prerequisite failed: " + which};
    }

    if (rep.preserves_covers.status == CheckStatus::Pass &&
        rep.preserves_hfp.status == CheckStatus::Pass &&
        rep.setdelta_equivariance.status == CheckStatus::Pass) {
        rep.preserves_hypercovers = check_preserves_hypercovers(E, up_to, caps);
    } else {
        std::string which = rep.preserves_covers.status != CheckStatus::Pass
                                ? "preserves_covers"
                                : (rep.preserves_hfp.status != CheckStatus::Pass
                                       ? "preserves_hfp"
                                       : "setdelta_equivariance");
        rep.preserves_hypercovers = {CheckStatus::Skipped, "prerequisite failed: " + which};
    }
    rep.descent = {CheckStatus::Skipped, "run the descent check with a bound hypercover"};
    return rep;
}

site::TopologyReport check_topology_transport(const EnergyFunctor& E, const Caps& caps) {
    auto img = site::image_site(E.source, E.target, E.obj_map, E.mor_map);
    auto valid = img.validate();
    if (!valid.ok()) {
        site::TopologyReport rep;
        rep.entries.push_back({"image_site_valid", CheckStatus::Fail, valid.summary()});
        return rep;
    }
    return site::check_topology_axioms(img, caps);
}

AffSite build_aff_site(const std::vector<FiniteCommRing>& rings,
                       const std::vector<std::vector<CoverFamily>>& covers, const Caps& caps) {
    using algebra::enumerate_homs;
    const int no = static_cast<int>(rings.size());
    std::vector<std::string> onames(no);
    for (int o = 0; o < no; ++o)
        onames[o] = "Spec(" + rings[o].name() + ")";
    std::vector<FiniteCategory::Mor> mors;
    std::vector<RingHom> homs;
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (auto& h : enumerate_homs(rings[b], rings[a], caps)) {
                std::string nm = onames[a] + "->" + onames[b] + ":";
                for (int v : h.map)
                    nm += std::to_string(v) + ",";
                mors.push_back({a, b, nm});
                homs.push_back(std::move(h));
            }
    const int nm = static_cast<int>(mors.size());
    auto find_mor = [&](int a, int b, const std::vector<int>& table) {
        for (int m = 0; m < nm; ++m)
            if (mors[m].src == a && mors[m].tgt == b && homs[m].map == table)
                return m;
        return -1;
    };
    std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (mors[f].tgt != mors[g].src)
                continue;
            // Spec-side composite g o f corresponds to ring-side f* o g*
            auto rf = algebra::compose(homs[f], homs[g]);
            comp[g][f] = find_mor(mors[f].src, mors[g].tgt, rf.map);
        }
    std::vector<int> ids(no);
    for (int o = 0; o < no; ++o)
        ids[o] = find_mor(o, o, algebra::identity_hom(rings[o]).map);
    FiniteCategory c("Aff", std::move(onames), std::move(mors), std::move(comp),
                     std::move(ids));
    std::vector<site::FactorizationData> fact(c.num_morphisms());
    for (int f = 0; f < c.num_morphisms(); ++f)
        fact[f] = {c.src(f), c.identity(c.src(f)), f};
    std::vector<std::string> labels(no);
    for (int o = 0; o < no; ++o)
        labels[o] = rings[o].name();
    AffSite A{FiniteSite(std::move(c), {}, {}, covers, std::move(fact), std::move(labels)),
              rings, std::move(homs)};
    // declare pullbacks for cospans among covering members, found by search
    std::map<std::pair<int, int>, site::PullbackData> pbs;
    const auto& ac = A.site.cat();
    for (int obj = 0; obj < ac.num_objects(); ++obj)
        for (const auto& fam : A.site.covers(obj))
            for (int f : fam)
                for (int g : fam) {
                    site::Diagram dg;
                    dg.objects = {ac.src(f), ac.src(g), obj};
                    dg.arrows.push_back({0, 2, f});
                    dg.arrows.push_back({1, 2, g});
                    auto cone = site::limit_cone(A.site, dg, caps);
                    if (cone)
                        pbs[{f, g}] = {cone->apex, cone->legs[0], cone->legs[1]};
                }
    std::vector<std::vector<CoverFamily>> cov2(ac.num_objects());
    for (int o = 0; o < ac.num_objects(); ++o)
        cov2[o] = A.site.covers(o);
    std::vector<site::FactorizationData> fact2(ac.num_morphisms());
    for (int f = 0; f < ac.num_morphisms(); ++f)
        fact2[f] = A.site.factorization(f);
    std::vector<std::string> labels2(ac.num_objects());
    for (int o = 0; o < ac.num_objects(); ++o)
        labels2[o] = A.site.ring_label(o);
    A.site = FiniteSite(A.site.cat(), std::move(pbs), {}, std::move(cov2), std::move(fact2),
                        std::move(labels2));
    return A;
}

AxiomVerdict check_descent(const EvaluableFunctor& F, const AffSite& A,
                           const AugmentedSimplicialObject& H, const Caps& caps) {
    if (H.levels.dim < 1)
        return {CheckStatus::Inconclusive, "hypercover truncated below level 1"};
    const auto& B = A.rings[H.base];
    const auto& A0 = A.rings[H.levels.objects[0]];
    const auto& A1 = A.rings[H.levels.objects[1]];
    const RingHom& coaug = A.homs[H.augmentation];   // B -> A0
    const RingHom& d0 = A.homs[H.levels.faces[1][0]];  // A0 -> A1
    const RingHom& d1 = A.homs[H.levels.faces[1][1]];
    auto FB = F.evaluate(B, caps);
    auto FA0 = F.evaluate(A0, caps);
    auto FA1 = F.evaluate(A1, caps);
    if (!FB.is_discrete() || !FA0.is_discrete() || !FA1.is_discrete())
        return {CheckStatus::Inconclusive,
                "descent is only decided for discrete-valued functors"};
    auto into = F.evaluate_hom(coaug, caps);
    auto m0 = F.evaluate_hom(d0, caps);
    auto m1 = F.evaluate_hom(d1, caps);
    std::vector<int> equalizer;
    for (int v = 0; v < FA0.count(0); ++v)
        if (m0.levels[0][v] == m1.levels[0][v])
            equalizer.push_back(v);
    // descent: the coaugmentation map is a bijection onto the equalizer
    std::vector<int> hit(FA0.count(0), 0);
    for (int v = 0; v < FB.count(0); ++v)
        ++hit[into.levels[0][v]];
    bool ok = true;
    for (int v : equalizer)
        if (hit[v] != 1)
            ok = false;
    int total = 0;
    for (int v = 0; v < FA0.count(0); ++v)
        total += hit[v];
    if (total != FB.count(0) || static_cast<int>(equalizer.size()) != FB.count(0))
        ok = false;
    std::string counts = "|F(B)| = " + std::to_string(FB.count(0)) +
                         ", |eq| = " + std::to_string(equalizer.size());
    if (!ok)
        return {CheckStatus::Fail, counts};
    return {CheckStatus::Pass, counts};
}

}  // namespace branekit::functors
