#include <doctest.h>

#include "branekit/site/hypercover.hpp"
#include "branekit/site/topology.hpp"

using namespace branekit;
using namespace branekit::site;

TEST_CASE("poset sites validate") {
    for (auto topo : {PosetTopology::JoinCovers, PosetTopology::ContainsId,
                      PosetTopology::DenseAtBottom, PosetTopology::AllNonempty}) {
        auto s = sites::subset_lattice(2, topo);
        CHECK(s.validate().ok());
    }
    CHECK(sites::divisor_lattice(12, PosetTopology::DenseAtBottom).validate().ok());
    CHECK(sites::chain_site(3, PosetTopology::JoinCovers).validate().ok());
}

TEST_CASE("finset site validates") {
    auto s = sites::finset_site(3);
    CHECK(s.validate().ok());
    CHECK(s.cat().num_objects() == 4);
}

TEST_CASE("topology axioms pass on the stock sites") {
    for (auto topo : {PosetTopology::JoinCovers, PosetTopology::ContainsId,
                      PosetTopology::DenseAtBottom, PosetTopology::AllNonempty}) {
        auto s = sites::subset_lattice(2, topo);
        auto rep = check_topology_axioms(s);
        CHECK(rep.ok());
    }
    CHECK(check_topology_axioms(sites::chain_site(3, PosetTopology::JoinCovers)).ok());
    CHECK(check_topology_axioms(sites::finset_site(3)).ok());
    CHECK(check_topology_axioms(sites::divisor_lattice(12, PosetTopology::DenseAtBottom)).ok());
}

TEST_CASE("removing a pulled-back family breaks axiom (iii) with a witness") {
    auto s = sites::subset_lattice(2, PosetTopology::JoinCovers);
    const auto& c = s.cat();
    // locate the family {emptyset -> {1}, id_{1}} inside Cov({1})
    int obj1 = -1;
    for (int o = 0; o < c.num_objects(); ++o)
        if (c.object_name(o) == "{1}")
            obj1 = o;
    REQUIRE(obj1 >= 0);
    std::vector<std::vector<CoverFamily>> covers(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o)
        covers[o] = s.covers(o);
    bool removed = false;
    for (auto it = covers[obj1].begin(); it != covers[obj1].end(); ++it)
        if (it->size() == 2) {
            covers[obj1].erase(it);
            removed = true;
            break;
        }
    REQUIRE(removed);
    auto broken = sites::with_covers(s, covers);
    auto rep = check_topology_axioms(broken);
    CHECK(!rep.ok());
    bool iii_failed = false;
    for (const auto& e : rep.entries)
        if (e.axiom == "pullback_stability" && e.status == CheckStatus::Fail)
            iii_failed = true;
    CHECK(iii_failed);
}

TEST_CASE("simplicial objects: constants validate, cech nerves validate") {
    auto s = sites::subset_lattice(2, PosetTopology::DenseAtBottom);
    auto c0 = constant_object(s, 0, 3);
    CHECK(validate(s, c0).ok());

    // bottom covers the top: its Cech nerve is the constant bottom object
    const auto& c = s.cat();
    int bottom_to_top = -1;
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (c.object_name(c.src(m)) == "{}" && c.object_name(c.tgt(m)) == "{12}")
            bottom_to_top = m;
    REQUIRE(bottom_to_top >= 0);
    auto cech = cech_nerve(s, bottom_to_top, 3);
    CHECK(validate(s, cech).ok());
    for (int n = 0; n <= 3; ++n)
        CHECK(c.object_name(cech.levels.objects[n]) == "{}");
}

TEST_CASE("tensor: unit and two-point exponents") {
    auto s = sites::subset_lattice(2, PosetTopology::JoinCovers);
    auto y = constant_object(s, 1, 2);
    auto k0 = branekit::simplicial::spaces::delta(0, 2);
    auto t = tensor(s, k0, y);
    for (int n = 0; n <= 2; ++n)
        CHECK(t.objects[n] == y.objects[n]);
    // in a poset the copower of equal summands collapses to the object itself
    auto k2 = branekit::simplicial::spaces::boundary_delta(1, 2);
    auto t2 = tensor(s, k2, y);
    for (int n = 0; n <= 2; ++n)
        CHECK(t2.objects[n] == y.objects[n]);

    auto fs = sites::finset_site(3);
    auto one = constant_object(fs, 1, 2);
    auto tf = tensor(fs, k2, one);
    for (int n = 0; n <= 2; ++n)
        CHECK(tf.objects[n] == 2);  // [1] + [1] = [2]
    CHECK(validate(fs, tf).ok());
}

TEST_CASE("cotensor levels: Yoneda against Delta^n and the two-point boundary") {
    auto fs = sites::finset_site(3);
    auto x = constant_object(fs, 2, 2);
    namespace sp = branekit::simplicial::spaces;
    // X^{Delta^n} = X_n for a constant object
    for (int n = 0; n <= 2; ++n) {
        auto lv = cotensor_level(fs, x, sp::delta(n, 2));
        CHECK(lv.cone.apex == 2);
    }
    // X^{boundary Delta^1} = X_0 x X_0; for [1] that is [1], for [2] out of range
    auto small = constant_object(fs, 1, 2);
    auto lv = cotensor_level(fs, small, sp::boundary_delta(1, 2));
    CHECK(lv.cone.apex == 1);
    CHECK_THROWS_AS(cotensor_level(fs, x, sp::boundary_delta(1, 2)), IncompleteError);
}

TEST_CASE("cech nerve of a dense bottom map is a hypercover") {
    auto s = sites::chain_site(2, PosetTopology::DenseAtBottom);
    const auto& c = s.cat();
    int u = -1;
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (c.src(m) == 0 && c.tgt(m) == 2)
            u = m;
    REQUIRE(u >= 0);
    auto cech = cech_nerve(s, u, 2);
    REQUIRE(validate(s, cech).ok());
    auto rep = is_hypercover(s, cech, 2);
    CHECK(rep.ok());
    for (const auto& lv : rep.levels)
        CHECK(lv.status == CheckStatus::Pass);
}

TEST_CASE("constant-on-iso augmented object is a hypercover") {
    auto fs = sites::finset_site(3);
    const auto& c = fs.cat();
    auto iso2 = c.identity(2);
    auto cech = cech_nerve(fs, iso2, 2);
    REQUIRE(validate(fs, cech).ok());
    CHECK(is_hypercover(fs, cech, 2).ok());
}

TEST_CASE("level-2 substitute breaks the hypercover exactly there") {
    auto fs = sites::finset_site(3);
    const auto& c = fs.cat();
    auto cech = cech_nerve(fs, c.identity(2), 2);
    // replace level 2 by [3] with a retraction s: [3]->[2] and section t
    int s_mor = -1, t_mor = -1;
    for (int m = 0; m < c.num_morphisms(); ++m) {
        if (c.src(m) == 3 && c.tgt(m) == 2 && c.morphism_name(m).find(":010") != std::string::npos)
            s_mor = m;
        if (c.src(m) == 2 && c.tgt(m) == 3 && c.morphism_name(m).find(":01") != std::string::npos)
            t_mor = m;
    }
    REQUIRE(s_mor >= 0);
    REQUIRE(t_mor >= 0);
    REQUIRE(c.compose(s_mor, t_mor) == c.identity(2));
    auto broken = cech;
    broken.levels.objects[2] = 3;
    broken.levels.faces[2] = {s_mor, s_mor, s_mor};
    broken.levels.degens[1] = {t_mor, t_mor};
    REQUIRE(validate(fs, broken).ok());
    auto rep = is_hypercover(fs, broken, 2);
    CHECK(!rep.ok());
    CHECK(rep.levels[0].status == CheckStatus::Pass);
    CHECK(rep.levels[1].status == CheckStatus::Pass);
    CHECK(rep.levels[2].status == CheckStatus::Fail);
}

TEST_CASE("image site of an inclusion validates and keeps its topology") {
    auto src = sites::chain_site(2, PosetTopology::DenseAtBottom);
    auto tgt = sites::divisor_lattice(12, PosetTopology::DenseAtBottom);
    // divisors of 12 ascending: 1,2,3,4,6,12 -> chain 1|2|4 sits at indices 0,1,3
    std::vector<int> obj_map = {0, 1, 3};
    std::vector<int> mor_map(src.cat().num_morphisms());
    for (int m = 0; m < src.cat().num_morphisms(); ++m) {
        auto hs = tgt.cat().homs(obj_map[src.cat().src(m)], obj_map[src.cat().tgt(m)]);
        REQUIRE(hs.size() == 1);
        mor_map[m] = hs[0];
    }
    auto img = image_site(src, tgt, obj_map, mor_map);
    CHECK(img.validate().ok());
    CHECK(check_topology_axioms(img).ok());
}
