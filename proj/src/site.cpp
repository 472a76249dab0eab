#include "branekit/site/site.hpp"

#include <algorithm>

namespace branekit::site {

FiniteSite::FiniteSite(FiniteCategory cat, std::map<std::pair<int, int>, PullbackData> pullbacks,
                       std::map<std::pair<int, int>, CoproductData> coproducts,
                       std::vector<std::vector<CoverFamily>> covers,
                       std::vector<FactorizationData> factorizations,
                       std::vector<std::string> ring_labels)
    : cat_(std::move(cat)),
      pullbacks_(std::move(pullbacks)),
      coproducts_(std::move(coproducts)),
      covers_(std::move(covers)),
      fact_(std::move(factorizations)),
      ring_labels_(std::move(ring_labels)) {
    if (static_cast<int>(covers_.size()) != cat_.num_objects())
        throw InputError("site '" + name() + "': cover table size mismatch");
    if (static_cast<int>(fact_.size()) != cat_.num_morphisms())
        throw InputError("site '" + name() + "': factorization table size mismatch");
    if (ring_labels_.empty())
        ring_labels_.assign(cat_.num_objects(), "");
    for (auto& per_obj : covers_)
        for (auto& fam : per_obj)
            std::sort(fam.begin(), fam.end());
}

const PullbackData& FiniteSite::pullback(int f, int g) const {
    auto it = pullbacks_.find({f, g});
    if (it == pullbacks_.end())
        throw IncompleteError("site '" + name() + "': missing pullback of cospan (" +
                              cat_.morphism_name(f) + ", " + cat_.morphism_name(g) + ")");
    return it->second;
}

const CoproductData& FiniteSite::coproduct(int a, int b) const {
    auto it = coproducts_.find({a, b});
    if (it == coproducts_.end())
        throw IncompleteError("site '" + name() + "': missing coproduct of (" +
                              cat_.object_name(a) + ", " + cat_.object_name(b) + ")");
    return it->second;
}

bool FiniteSite::is_cover(int obj, CoverFamily family) const {
    std::sort(family.begin(), family.end());
    for (const auto& f : covers_[obj])
        if (f == family)
            return true;
    return false;
}

bool FiniteSite::covers_with_isos(int obj, const CoverFamily& family) const {
    if (is_cover(obj, family))
        return true;
    if (family.size() == 1 && cat_.tgt(family[0]) == obj && cat_.is_iso(family[0]))
        return true;
    return false;
}

ValidationReport FiniteSite::validate() const {
    ValidationReport rep = cat_.validate();
    for (const auto& [key, pb] : pullbacks_) {
        auto [f, g] = key;
        const std::string w = "(" + cat_.morphism_name(f) + "," + cat_.morphism_name(g) + ")";
        if (cat_.tgt(f) != cat_.tgt(g)) {
            rep.fail("pullback key is not a cospan", w);
            continue;
        }
        if (cat_.src(pb.p1) != pb.apex || cat_.src(pb.p2) != pb.apex ||
            cat_.tgt(pb.p1) != cat_.src(f) || cat_.tgt(pb.p2) != cat_.src(g)) {
            rep.fail("pullback projections ill-typed", w);
            continue;
        }
        if (cat_.compose(f, pb.p1) != cat_.compose(g, pb.p2)) {
            rep.fail("pullback square does not commute", w);
            continue;
        }
        for (int t = 0; t < cat_.num_objects(); ++t)
            for (int u : cat_.homs(t, cat_.src(f)))
                for (int v : cat_.homs(t, cat_.src(g))) {
                    if (cat_.compose(f, u) != cat_.compose(g, v))
                        continue;
                    int count = 0;
                    for (int m : cat_.homs(t, pb.apex))
                        if (cat_.compose(pb.p1, m) == u && cat_.compose(pb.p2, m) == v)
                            ++count;
                    if (count != 1)
                        rep.fail("pullback universal property",
                                 w + " cone from " + cat_.object_name(t));
                }
    }
    for (const auto& [key, cp] : coproducts_) {
        auto [a, b] = key;
        const std::string w = "(" + cat_.object_name(a) + "," + cat_.object_name(b) + ")";
        if (cat_.src(cp.inj1) != a || cat_.src(cp.inj2) != b || cat_.tgt(cp.inj1) != cp.obj ||
            cat_.tgt(cp.inj2) != cp.obj) {
            rep.fail("coproduct injections ill-typed", w);
            continue;
        }
        for (int t = 0; t < cat_.num_objects(); ++t)
            for (int u : cat_.homs(a, t))
                for (int v : cat_.homs(b, t)) {
                    int count = 0;
                    for (int m : cat_.homs(cp.obj, t))
                        if (cat_.compose(m, cp.inj1) == u && cat_.compose(m, cp.inj2) == v)
                            ++count;
                    if (count != 1)
                        rep.fail("coproduct universal property",
                                 w + " cocone to " + cat_.object_name(t));
                }
    }
    for (int f = 0; f < cat_.num_morphisms(); ++f) {
        const auto& fa = fact_[f];
        if (cat_.src(fa.left) != cat_.src(f) || cat_.tgt(fa.left) != fa.mid ||
            cat_.src(fa.right) != fa.mid || cat_.tgt(fa.right) != cat_.tgt(f) ||
            cat_.compose(fa.right, fa.left) != f)
            rep.fail("factorization", cat_.morphism_name(f));
    }
    for (int obj = 0; obj < cat_.num_objects(); ++obj)
        for (const auto& fam : covers_[obj]) {
            if (fam.empty())
                rep.fail("empty covering family", cat_.object_name(obj));
            for (int m : fam)
                if (cat_.tgt(m) != obj)
                    rep.fail("cover member has wrong target",
                             cat_.object_name(obj) + ":" + cat_.morphism_name(m));
        }
    return rep;
}

namespace sites {

namespace {

std::vector<FactorizationData> identity_factorizations(const FiniteCategory& c) {
    std::vector<FactorizationData> out(c.num_morphisms());
    for (int f = 0; f < c.num_morphisms(); ++f)
        out[f] = {c.src(f), c.identity(c.src(f)), f};
    return out;
}

/* All covering families of obj under the given poset topology. */
std::vector<std::vector<CoverFamily>> poset_covers(const FiniteCategory& c,
                                                   PosetTopology topology) {
    // join table (-1 when no join); bottom = object below everything, if any
    const int no = c.num_objects();
    auto below = [&](int a, int b) { return !c.homs(a, b).empty(); };
    std::vector<std::vector<int>> join(no, std::vector<int>(no, -1));
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            for (int u = 0; u < no; ++u) {
                if (!below(a, u) || !below(b, u))
                    continue;
                bool least = true;
                for (int v = 0; v < no; ++v)
                    if (below(a, v) && below(b, v) && !below(u, v))
                        least = false;
                if (least) {
                    join[a][b] = u;
                    break;
                }
            }
        }
    int bottom = -1;
    for (int a = 0; a < no; ++a) {
        bool ok = true;
        for (int b = 0; b < no; ++b)
            if (!below(a, b))
                ok = false;
        if (ok)
            bottom = a;
    }
    std::vector<std::vector<CoverFamily>> covers(no);
    for (int obj = 0; obj < no; ++obj) {
        std::vector<int> in;
        for (int m = 0; m < c.num_morphisms(); ++m)
            if (c.tgt(m) == obj)
                in.push_back(m);
        const int k = static_cast<int>(in.size());
        if (k > 20)
            throw CapError("poset_covers: too many morphisms into one object");
        for (int mask = 1; mask < (1 << k); ++mask) {
            CoverFamily fam;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i))
                    fam.push_back(in[i]);
            bool covering = false;
            switch (topology) {
                case PosetTopology::AllNonempty: covering = true; break;
                case PosetTopology::ContainsId: {
                    for (int m : fam)
                        if (c.is_identity(m))
                            covering = true;
                    break;
                }
                case PosetTopology::DenseAtBottom: {
                    for (int m : fam)
                        if (c.src(m) == bottom || c.is_identity(m))
                            covering = true;
                    break;
                }
                case PosetTopology::JoinCovers: {
                    int j = c.src(fam[0]);
                    for (size_t i = 1; i < fam.size() && j >= 0; ++i)
                        j = join[j][c.src(fam[i])];
                    covering = j == obj;
                    break;
                }
            }
            if (covering)
                covers[obj].push_back(fam);
        }
    }
    return covers;
}

}  // namespace

FiniteSite from_poset(const FiniteCategory& c, PosetTopology topology) {
    const int no = c.num_objects();
    auto below = [&](int a, int b) { return !c.homs(a, b).empty(); };
    auto hom_of = [&](int a, int b) { return c.homs(a, b)[0]; };
    // meets where they exist
    std::map<std::pair<int, int>, PullbackData> pbs;
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g) {
            if (c.tgt(f) != c.tgt(g))
                continue;
            const int a = c.src(f), b = c.src(g);
            for (int u = 0; u < no; ++u) {
                if (!below(u, a) || !below(u, b))
                    continue;
                bool greatest = true;
                for (int v = 0; v < no; ++v)
                    if (below(v, a) && below(v, b) && !below(v, u))
                        greatest = false;
                if (greatest) {
                    pbs[{f, g}] = {u, hom_of(u, a), hom_of(u, b)};
                    break;
                }
            }
        }
    std::map<std::pair<int, int>, CoproductData> cps;
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b)
            for (int u = 0; u < no; ++u) {
                if (!below(a, u) || !below(b, u))
                    continue;
                bool least = true;
                for (int v = 0; v < no; ++v)
                    if (below(a, v) && below(b, v) && !below(u, v))
                        least = false;
                if (least) {
                    cps[{a, b}] = {u, hom_of(a, u), hom_of(b, u)};
                    break;
                }
            }
    return FiniteSite(c, std::move(pbs), std::move(cps), poset_covers(c, topology),
                      identity_factorizations(c));
}

FiniteSite subset_lattice(int ground_size, PosetTopology topology) {
    const int total = 1 << ground_size;
    std::vector<std::string> names(total);
    std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
    for (int a = 0; a < total; ++a) {
        std::string s = "{";
        for (int v = 0; v < ground_size; ++v)
            if (a & (1 << v))
                s += std::to_string(v + 1);
        names[a] = s + "}";
        for (int b = 0; b < total; ++b)
            if ((a & b) == a)
                leq[a][b] = true;
    }
    auto c = cat::poset("P(" + std::to_string(ground_size) + ")", std::move(names), leq);
    return from_poset(c, topology);
}

FiniteSite divisor_lattice(int n, PosetTopology topology) {
    std::vector<int> divs;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            divs.push_back(d);
    const int k = static_cast<int>(divs.size());
    std::vector<std::string> names(k);
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
        names[i] = std::to_string(divs[i]);
        for (int j = 0; j < k; ++j)
            if (divs[j] % divs[i] == 0)
                leq[i][j] = true;
    }
    auto c = cat::poset("Div(" + std::to_string(n) + ")", std::move(names), leq);
    return from_poset(c, topology);
}

FiniteSite chain_site(int length, PosetTopology topology) {
    return from_poset(cat::chain(length), topology);
}

FiniteSite finset_site(int max_size) {
    // objects are sizes 0..max_size; morphisms are functions encoded as value tuples
    const int no = max_size + 1;
    std::vector<std::string> onames(no);
    for (int s = 0; s < no; ++s)
        onames[s] = "[" + std::to_string(s) + "]";
    std::vector<FiniteCategory::Mor> mors;
    std::vector<std::vector<int>> tables;  // tables[m][x] = value
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            if (a > 0 && b == 0)
                continue;  // no maps from nonempty to empty
            const long long count = a == 0 ? 1 : [&] {
                long long c = 1;
                for (int i = 0; i < a; ++i)
                    c *= b;
                return c;
            }();
            for (long long code = 0; code < count; ++code) {
                std::vector<int> t(a);
                long long c2 = code;
                for (int i = 0; i < a; ++i) {
                    t[i] = static_cast<int>(c2 % b);
                    c2 /= b;
                }
                std::string nm = onames[a] + "->" + onames[b] + ":";
                for (int v : t)
                    nm += std::to_string(v);
                mors.push_back({a, b, nm});
                tables.push_back(std::move(t));
            }
        }
    const int nm = static_cast<int>(mors.size());
    auto find_mor = [&](int a, int b, const std::vector<int>& t) {
        for (int m = 0; m < nm; ++m)
            if (mors[m].src == a && mors[m].tgt == b && tables[m] == t)
                return m;
        return -1;
    };
    std::vector<std::vector<int>> comp(nm, std::vector<int>(nm, -1));
    for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f) {
            if (mors[f].tgt != mors[g].src)
                continue;
            std::vector<int> t(mors[f].src);
            for (int i = 0; i < mors[f].src; ++i)
                t[i] = tables[g][tables[f][i]];
            comp[g][f] = find_mor(mors[f].src, mors[g].tgt, t);
        }
    std::vector<int> ids(no);
    for (int o = 0; o < no; ++o) {
        std::vector<int> t(o);
        for (int i = 0; i < o; ++i)
            t[i] = i;
        ids[o] = find_mor(o, o, t);
    }
    FiniteCategory c("FinSet<=" + std::to_string(max_size), std::move(onames), std::move(mors),
                     std::move(comp), std::move(ids));
    // the first lookup captured `mors`, moved away just above; rebind through c
    auto find_mor2 = [&](int a, int b, const std::vector<int>& t) {
        for (int m = 0; m < nm; ++m)
            if (c.src(m) == a && c.tgt(m) == b && tables[m] == t)
                return m;
        return -1;
    };
    // pullbacks where the fiber product fits a site object
    std::map<std::pair<int, int>, PullbackData> pbs;
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g) {
            if (c.tgt(f) != c.tgt(g))
                continue;
            const int a = c.src(f), b = c.src(g);
            std::vector<std::pair<int, int>> fp;
            for (int x = 0; x < a; ++x)
                for (int y = 0; y < b; ++y)
                    if (tables[f][x] == tables[g][y])
                        fp.push_back({x, y});
            const int sz = static_cast<int>(fp.size());
            if (sz > max_size)
                continue;
            std::vector<int> t1(sz), t2(sz);
            for (int i = 0; i < sz; ++i) {
                t1[i] = fp[i].first;
                t2[i] = fp[i].second;
            }
            const int p1 = find_mor2(sz, a, t1), p2 = find_mor2(sz, b, t2);
            pbs[{f, g}] = {sz, p1, p2};
        }
    std::map<std::pair<int, int>, CoproductData> cps;
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            if (a + b > max_size)
                continue;
            std::vector<int> t1(a), t2(b);
            for (int i = 0; i < a; ++i)
                t1[i] = i;
            for (int i = 0; i < b; ++i)
                t2[i] = a + i;
            cps[{a, b}] = {a + b, find_mor2(a, a + b, t1), find_mor2(b, a + b, t2)};
        }
    // iso-singleton covers
    std::vector<std::vector<CoverFamily>> covers(no);
    for (int m = 0; m < nm; ++m)
        if (c.is_iso(m))
            covers[c.tgt(m)].push_back({m});
    auto facts = identity_factorizations(c);
    return FiniteSite(std::move(c), std::move(pbs), std::move(cps), std::move(covers),
                      std::move(facts));
}

FiniteSite with_flipped_factorizations(const FiniteSite& s) {
    const auto& c = s.cat();
    std::vector<FactorizationData> fact(c.num_morphisms());
    for (int f = 0; f < c.num_morphisms(); ++f)
        fact[f] = {c.tgt(f), f, c.identity(c.tgt(f))};
    std::vector<std::vector<CoverFamily>> covers(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o)
        covers[o] = s.covers(o);
    std::vector<std::string> labels(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o)
        labels[o] = s.ring_label(o);
    return FiniteSite(c, s.all_pullbacks(), s.all_coproducts(), std::move(covers),
                      std::move(fact), std::move(labels));
}

FiniteSite with_covers(const FiniteSite& s, std::vector<std::vector<CoverFamily>> covers) {
    const auto& c = s.cat();
    std::vector<FactorizationData> fact(c.num_morphisms());
    for (int f = 0; f < c.num_morphisms(); ++f)
        fact[f] = s.factorization(f);
    std::vector<std::string> labels(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o)
        labels[o] = s.ring_label(o);
    return FiniteSite(c, s.all_pullbacks(), s.all_coproducts(), std::move(covers),
                      std::move(fact), std::move(labels));
}

}  // namespace sites

}  // namespace branekit::site
