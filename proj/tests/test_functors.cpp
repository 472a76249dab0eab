#include <doctest.h>

#include "branekit/algebra/homs.hpp"
#include "branekit/functors/checks.hpp"
#include "branekit/simplicial/verdict.hpp"

using namespace branekit;
using namespace branekit::functors;
using algebra::rings::trunc_poly;
using algebra::rings::zmod;
using site::PosetTopology;
namespace sites = site::sites;

namespace {

constexpr std::uint64_t kSeed = 42;

EnergyFunctor make_inclusion_energy() {
    auto src = sites::chain_site(2, PosetTopology::DenseAtBottom);
    auto tgt = sites::divisor_lattice(12, PosetTopology::DenseAtBottom);
    return poset_energy("E_incl", src, tgt, {0, 1, 3});
}

EnergyFunctor make_conjugation_energy() {
    auto fs = sites::finset_site(3);
    const auto& c = fs.cat();
    // sigma: identity on [0], [1]; the swap on [2]; a 3-cycle on [3]
    auto find = [&](int a, int b, const std::string& suffix) {
        for (int m = 0; m < c.num_morphisms(); ++m)
            if (c.src(m) == a && c.tgt(m) == b &&
                c.morphism_name(m).substr(c.morphism_name(m).find(':')) == suffix)
                return m;
        throw InputError("fixture: morphism not found");
    };
    std::vector<int> sigma = {c.identity(0), c.identity(1), find(2, 2, ":10"),
                              find(3, 3, ":120")};
    std::vector<int> sigma_inv(sigma.size());
    for (size_t o = 0; o < sigma.size(); ++o)
        sigma_inv[o] = *c.inverse(sigma[o]);
    std::vector<int> obj_map(c.num_objects()), mor_map(c.num_morphisms());
    for (int o = 0; o < c.num_objects(); ++o)
        obj_map[o] = o;
    for (int m = 0; m < c.num_morphisms(); ++m)
        mor_map[m] = c.compose(sigma[c.tgt(m)], c.compose(m, sigma_inv[c.src(m)]));
    return EnergyFunctor("E_conj", fs, fs, std::move(obj_map), std::move(mor_map));
}

EnergyFunctor make_constant_energy() {
    auto fs = sites::finset_site(3);
    const auto& c = fs.cat();
    std::vector<int> obj_map(c.num_objects(), 1);
    std::vector<int> mor_map(c.num_morphisms(), c.identity(1));
    return EnergyFunctor("E_const1", fs, fs, std::move(obj_map), std::move(mor_map));
}

void expect_exact_failures(const AxiomReport& rep, std::vector<std::string> expected) {
    auto failed = rep.failed_axioms();
    std::sort(failed.begin(), failed.end());
    std::sort(expected.begin(), expected.end());
    CHECK(failed == expected);
}

}  // namespace

TEST_CASE("evaluate: representable and constant examples") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto f2e = algebra::dual_numbers(z2).total;

    auto rz2 = EvaluableFunctor::representable(z2);
    CHECK(rz2.evaluate(z2).count(0) == 1);

    auto rf2t = EvaluableFunctor::representable(f2t);
    CHECK(rf2t.evaluate(f2e).count(0) == 2);

    auto c = EvaluableFunctor::constant(simplicial::spaces::boundary_delta(1, 4), "bDelta1");
    CHECK(c.evaluate(z2).count(0) == 2);
    CHECK(c.evaluate(f2e).count(0) == 2);
}

TEST_CASE("functoriality holds for every stock functor on a small universe") {
    std::vector<algebra::FiniteCommRing> universe = {zmod(2), zmod(3),
                                                     trunc_poly(zmod(2), 2)};
    std::vector<EvaluableFunctor> fs = {
        EvaluableFunctor::representable(trunc_poly(zmod(2), 2)),
        EvaluableFunctor::representable(zmod(4)),
        EvaluableFunctor::constant(simplicial::spaces::delta(0, 4), "pt"),
        EvaluableFunctor::units_nerve(4)};
    for (const auto& F : fs)
        CHECK(check_functoriality(F, universe).ok());
}

TEST_CASE("units nerve evaluates to torsion witnesses") {
    auto un = EvaluableFunctor::units_nerve(3);
    auto at3 = un.evaluate(zmod(3));
    auto rep = simplicial::reduced_homology(at3);
    REQUIRE(rep.torsion[1].size() == 1);
    CHECK(rep.torsion[1][0] == 2);  // units of Z/3 form Z/2
}

TEST_CASE("brane composition: identity energy gives pointwise equality") {
    auto z2 = zmod(2);
    auto V = EvaluableFunctor::representable(trunc_poly(z2, 2));
    auto E = identity_energy(sites::subset_lattice(2, PosetTopology::JoinCovers), "E_id");
    auto brane = compose_brane(V, E);
    for (const auto& A : {zmod(2), zmod(3), algebra::dual_numbers(z2).total}) {
        auto lhs = brane.composite.evaluate(A);
        auto rhs = V.evaluate(A);
        CHECK(lhs.count(0) == rhs.count(0));
    }
}

TEST_CASE("brane composition: relabeling energy evaluates V after relabeling") {
    auto z2a = zmod(2);
    auto z2b = algebra::FiniteCommRing("Z/2'", {"0", "1"}, {{0, 1}, {1, 0}},
                                       {{0, 0}, {0, 1}}, 0, 1);
    AlgebraAction act;
    act.kind = AlgebraAction::Kind::Relabel;
    act.relabel = {{z2a, z2b}, {z2b, z2a}};
    auto fs = sites::finset_site(2);
    EnergyFunctor E = identity_energy(fs, "E_swap");
    E.action = act;
    auto V = EvaluableFunctor::representable(trunc_poly(zmod(2), 2));
    auto brane = compose_brane(V, E);
    CHECK(brane.composite.evaluate(z2a).count(0) == V.evaluate(z2b).count(0));
}

TEST_CASE("compliant energies pass the whole axiom suite") {
    std::vector<EnergyFunctor> zoo;
    zoo.push_back(identity_energy(sites::subset_lattice(2, PosetTopology::JoinCovers), "E_id"));
    zoo.push_back(
        identity_energy(sites::subset_lattice(2, PosetTopology::DenseAtBottom), "E_id_dense"));
    zoo.push_back(make_inclusion_energy());
    zoo.push_back(make_conjugation_energy());
    for (const auto& E : zoo) {
        auto rep = run_axiom_suite(E, kSeed, 2);
        INFO("energy ", E.name);
        CHECK(rep.preserves_covers.status == CheckStatus::Pass);
        CHECK(rep.reflects_covers.status == CheckStatus::Pass);
        CHECK(rep.preserves_pullbacks.status == CheckStatus::Pass);
        CHECK(rep.preserves_factorizations.status == CheckStatus::Pass);
        CHECK(rep.setdelta_equivariance.status == CheckStatus::Pass);
        CHECK(rep.exponential_lemma.status == CheckStatus::Pass);
        CHECK(rep.preserves_hfp.status == CheckStatus::Pass);
        CHECK(rep.preserves_hypercovers.status == CheckStatus::Pass);
        CHECK(!rep.consequence_violation());
    }
}

TEST_CASE("fault museum: exactly the intended axioms fail") {
    auto p2_join = sites::subset_lattice(2, PosetTopology::JoinCovers);
    auto p2_min = sites::subset_lattice(2, PosetTopology::ContainsId);

    SUBCASE("dropping covers breaks preservation only") {
        auto E = identity_on_objects("E_drop_cover", p2_join, p2_min);
        auto rep = run_axiom_suite(E, kSeed, 2);
        expect_exact_failures(rep, {"preserves_covers"});
        CHECK(rep.preserves_hypercovers.status == CheckStatus::Skipped);
        CHECK(!rep.consequence_violation());
    }
    SUBCASE("target with extra covers breaks reflection only") {
        auto E = identity_on_objects("E_extra_cover", p2_min, p2_join);
        auto rep = run_axiom_suite(E, kSeed, 2);
        expect_exact_failures(rep, {"reflects_covers"});
        CHECK(!rep.consequence_violation());
    }
    SUBCASE("meet-breaking map fails pullbacks only, and hfp is gated off") {
        auto chain = sites::chain_site(3, PosetTopology::JoinCovers);
        auto E = poset_energy("E_meet_break", p2_min, chain, {0, 1, 2, 3});
        auto rep = run_axiom_suite(E, kSeed, 2);
        expect_exact_failures(rep, {"preserves_pullbacks"});
        CHECK(rep.preserves_hfp.status == CheckStatus::Skipped);
        CHECK(rep.preserves_hfp.witness.find("preserves_pullbacks") != std::string::npos);
        CHECK(!rep.consequence_violation());
    }
    SUBCASE("flipped factorizations fail exactly that axiom") {
        auto flipped = sites::with_flipped_factorizations(p2_join);
        auto E = identity_on_objects("E_fact_break", p2_join, flipped);
        auto rep = run_axiom_suite(E, kSeed, 2);
        expect_exact_failures(rep, {"preserves_factorizations"});
        CHECK(rep.preserves_hfp.status == CheckStatus::Skipped);
        CHECK(!rep.consequence_violation());
    }
    SUBCASE("constant energy fails reflection and equivariance together") {
        auto E = make_constant_energy();
        auto rep = run_axiom_suite(E, kSeed, 2);
        expect_exact_failures(rep, {"reflects_covers", "setdelta_equivariance"});
        CHECK(rep.preserves_hypercovers.status == CheckStatus::Skipped);
        CHECK(rep.exponential_lemma.status == CheckStatus::Skipped);
        CHECK(!rep.consequence_violation());
    }
}

TEST_CASE("topology transport passes for every compliant energy") {
    std::vector<EnergyFunctor> zoo;
    zoo.push_back(identity_energy(sites::subset_lattice(2, PosetTopology::JoinCovers), "E_id"));
    zoo.push_back(
        identity_energy(sites::subset_lattice(2, PosetTopology::DenseAtBottom), "E_id_dense"));
    zoo.push_back(make_inclusion_energy());
    zoo.push_back(make_conjugation_energy());
    for (const auto& E : zoo) {
        auto rep = check_topology_transport(E);
        INFO("energy ", E.name);
        CHECK(rep.ok());
    }
}

TEST_CASE("descent along the doubled self-cover of Spec Z/2") {
    auto z2 = zmod(2);
    auto z2sq = algebra::rings::power(z2, 2);
    auto z2quad = algebra::rings::power(z2, 4);
    std::vector<algebra::FiniteCommRing> rings = {z2, z2sq, z2quad};
    // the unique hom Z/2 -> Z/2 x Z/2 gives the covering Spec(Z2^2) -> Spec(Z2)
    std::vector<std::vector<site::CoverFamily>> covers(3);
    auto aff = build_aff_site(rings, covers);
    const auto& c = aff.site.cat();
    int cmor = -1;
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (c.src(m) == 1 && c.tgt(m) == 0)
            cmor = m;
    REQUIRE(cmor >= 0);
    covers[0].push_back({cmor});
    aff = build_aff_site(rings, covers);
    auto cech = site::cech_nerve(aff.site, cmor, 1);
    REQUIRE(validate(aff.site, cech).ok());
    CHECK(c.object_name(cech.levels.objects[1]) == "Spec(Z/2xZ/2xZ/2xZ/2)");
    auto hrep = site::is_hypercover(aff.site, cech, 1);
    CHECK(hrep.ok());

    // oracle-fixed counts: |F(B)| = 2, |F(A0)| = 4, |F(A1)| = 16, equalizer = 2
    auto F = EvaluableFunctor::representable(z2sq);
    CHECK(F.evaluate(z2).count(0) == 2);
    CHECK(F.evaluate(z2sq).count(0) == 4);
    CHECK(F.evaluate(z2quad).count(0) == 16);
    auto v = check_descent(F, aff, cech);
    CHECK(v.status == CheckStatus::Pass);
    CHECK(v.witness.find("|F(B)| = 2") != std::string::npos);
    CHECK(v.witness.find("|eq| = 2") != std::string::npos);

    auto pt = EvaluableFunctor::constant(simplicial::spaces::delta(0, 4), "pt");
    CHECK(check_descent(pt, aff, cech).status == CheckStatus::Pass);

    auto f2t = trunc_poly(z2, 2);
    CHECK(check_descent(EvaluableFunctor::representable(f2t), aff, cech).status ==
          CheckStatus::Pass);
}
