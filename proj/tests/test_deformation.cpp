#include <doctest.h>

#include <functional>

#include "branekit/deformation/deformation.hpp"

using namespace branekit;
using namespace branekit::deformation;
using algebra::rings::trunc_poly;
using algebra::rings::zmod;
using functors::EvaluableFunctor;
using simplicial::Status;

namespace {

/* Test-side hom enumeration: plain elementwise backtracking, no closure
 * propagation; independent of the library's search. */
std::vector<std::vector<int>> oracle_homs(const algebra::FiniteCommRing& B,
                                          const algebra::FiniteCommRing& C) {
    std::vector<std::vector<int>> found;
    std::vector<int> img(B.size(), -1);
    auto consistent = [&](int k) {
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                int s = B.add(a, b), p = B.mul(a, b);
                if (s <= k && img[s] != C.add(img[a], img[b]))
                    return false;
                if (p <= k && img[p] != C.mul(img[a], img[b]))
                    return false;
            }
        return true;
    };
    std::function<void(int)> rec = [&](int k) {
        if (k == B.size()) {
            found.push_back(img);
            return;
        }
        for (int c = 0; c < C.size(); ++c) {
            img[k] = c;
            if ((k != B.zero() || c == C.zero()) && (k != B.one() || c == C.one()) &&
                consistent(k))
                rec(k + 1);
        }
        img[k] = -1;
    };
    rec(0);
    return found;
}

int oracle_fiber_count(const algebra::FiniteCommRing& B, const algebra::SquareZeroExtension& ext,
                       const std::vector<int>& x_map) {
    int count = 0;
    for (const auto& h : oracle_homs(B, ext.total)) {
        bool over_x = true;
        for (int b = 0; b < B.size(); ++b)
            if (ext.projection.map[h[b]] != x_map[b])
                over_x = false;
        if (over_x)
            ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("derivations of a representable at the split square-zero extension") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto F = EvaluableFunctor::representable(f2t);
    auto M = algebra::modules::free_rank_one(z2);

    auto d = derivations(F, z2, 0, M);
    CHECK(d.fiber.branch == simplicial::FiberBranch::Discrete);
    CHECK(d.components() == 2);  // lifts t -> (0,0) and t -> (0,1)
    CHECK(d.zero_vertex >= 0);
    CHECK(d.verdict().status == Status::NonContractible);

    auto d0 = derivations(F, z2, 0, algebra::modules::zero_module(z2));
    CHECK(d0.components() == 1);
    CHECK(d0.verdict().status == Status::Contractible);
}

TEST_CASE("derivations of constant functors are contractible") {
    auto z3 = zmod(3);
    auto F = EvaluableFunctor::constant(simplicial::spaces::discrete(3, 4), "disc3");
    auto M = algebra::modules::free_rank_one(z3);
    for (int x = 0; x < 3; ++x) {
        auto d = derivations(F, z3, x, M);
        CHECK(d.verdict().status == Status::Contractible);
    }
    auto Fn = EvaluableFunctor::constant_nerve(cat::cyclic_group(2), 4);
    auto dn = derivations(Fn, z3, 0, M);
    CHECK(dn.fiber.branch == simplicial::FiberBranch::CommaNerve);
    CHECK(dn.verdict().status == Status::Contractible);
}

TEST_CASE("units-nerve derivations produce the kernel groupoid") {
    auto z3 = zmod(3);
    auto F = EvaluableFunctor::units_nerve(4);
    auto M = algebra::modules::free_rank_one(z3);
    auto d = derivations(F, z3, 0, M);
    CHECK(d.fiber.branch == simplicial::FiberBranch::CommaNerve);
    CHECK(d.components() == 1);
    auto v = d.verdict();
    CHECK(v.status == Status::NonContractible);
    CHECK(v.witness.find("torsion Z/3") != std::string::npos);
}

TEST_CASE("oracle equivalence on a small universe") {
    auto z2 = zmod(2);
    auto z3 = zmod(3);
    auto z4 = zmod(4);
    auto f2t = trunc_poly(z2, 2);
    std::vector<algebra::FiniteCommRing> Bs = {f2t, zmod(2), z4};
    std::vector<algebra::FiniteCommRing> As = {z2, z3, z4};
    for (const auto& B : Bs)
        for (const auto& A : As) {
            auto M = algebra::modules::free_rank_one(A);
            auto ext = algebra::square_zero_extend(A, M);
            auto F = EvaluableFunctor::representable(B);
            auto xs = algebra::enumerate_homs(B, A);
            int total = 0;
            for (size_t x = 0; x < xs.size(); ++x) {
                auto d = derivations(F, A, static_cast<int>(x), M);
                const int expect = oracle_fiber_count(B, ext, xs[x].map);
                CHECK(d.components() == expect);
                total += d.components();
            }
            CHECK(total == static_cast<int>(oracle_homs(B, ext.total).size()));
        }
}

TEST_CASE("tangent evaluation: frozen counts and the retraction law") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto t = tangent(EvaluableFunctor::representable(f2t), z2);
    CHECK(t.space.count(0) == 2);  // t -> 0 and t -> e
    CHECK(t.section.levels[0].size() == 1);

    auto tc = tangent(EvaluableFunctor::constant(simplicial::spaces::boundary_delta(1, 4), "S0"),
                      z2);
    CHECK(tc.space.count(0) == 2);

    auto tr = tangent(EvaluableFunctor::representable(zmod(2)), zmod(3));
    CHECK(tr.space.count(0) <= 1);

    // retraction exactly, for several functors and rings
    std::vector<EvaluableFunctor> fs = {EvaluableFunctor::representable(f2t),
                                        EvaluableFunctor::units_nerve(4),
                                        EvaluableFunctor::constant_nerve(cat::cyclic_group(2), 4)};
    for (const auto& F : fs)
        for (const auto& A : {zmod(2), zmod(3), zmod(4)}) {
            auto te = tangent(F, A);
            auto r = simplicial::compose(te.projection, te.section);
            CHECK(r.levels == simplicial::identity_map(te.section.source).levels);
        }
}

TEST_CASE("relative derivations: frozen counts for the representable example") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto F = EvaluableFunctor::representable(f2t);
    auto M = algebra::modules::free_rank_one(z2);

    // frozen by hand: Der has 2 points, Der_T has 4, exactly one lift lands on
    // the zero component of the tangent side
    auto rel = relative_derivations(F, z2, 0, M);
    CHECK(rel.fiber.branch == simplicial::FiberBranch::Discrete);
    CHECK(rel.components() == 1);
    CHECK(rel.verdict().status == Status::Contractible);

    auto rel0 = relative_derivations(F, z2, 0, algebra::modules::zero_module(z2));
    CHECK(rel0.verdict().status == Status::Contractible);
}

TEST_CASE("relative derivations of constants and units nerves collapse correctly") {
    auto z3 = zmod(3);
    auto M = algebra::modules::free_rank_one(z3);
    Caps wide;
    wide.carrier_cap = 128;  // (Z/3 + Z/3)[e] has 81 elements
    auto Fc = EvaluableFunctor::constant(simplicial::spaces::discrete(2, 4), "S0");
    auto r1 = relative_derivations(Fc, z3, 0, M, wide);
    CHECK(r1.verdict().status == Status::Contractible);

    // units side over Z/2: Der = B(Z/2), Der_T = B(Z/2 x Z/2), and the relative
    // space is the coset set of the section image: two contractible components
    auto z2 = zmod(2);
    auto Fu = EvaluableFunctor::units_nerve(4);
    auto r2 = relative_derivations(Fu, z2, 0, algebra::modules::free_rank_one(z2));
    CHECK(r2.components() == 2);
    CHECK(r2.verdict().status == Status::NonContractible);
}

TEST_CASE("uncertainty product verdict law") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto M = algebra::modules::free_rank_one(z2);
    auto F = EvaluableFunctor::representable(f2t);

    auto v_side = relative_derivations(F, z2, 0, M);   // contractible point
    auto e_side = derivations(F, z2, 0, M);            // two points

    auto verdict = uncertainty_product(v_side, e_side);
    CHECK(verdict.product.status == Status::NonContractible);
    CHECK(verdict.uncertainty == UncertaintyStatus::Holds);
    CHECK(verdict.provenance == "E-side factor");

    // both single points: product contractible, uncertainty fails and is flagged
    auto single = derivations(F, z2, 0, algebra::modules::zero_module(z2));
    auto flat = uncertainty_product(v_side, single);
    CHECK(flat.product.status == Status::Contractible);
    CHECK(flat.uncertainty == UncertaintyStatus::Fails);

    // empty factor forces non-contractibility
    DerivationSpace empty{{F, z2, 0},
                          M,
                          simplicial::FiberResult{simplicial::spaces::empty_space(4),
                                                  simplicial::FiberBranch::Discrete,
                                                  0,
                                                  4,
                                                  {},
                                                  std::nullopt,
                                                  std::nullopt},
                          -1};
    auto forced = uncertainty_product(empty, single);
    CHECK(forced.product.status == Status::NonContractible);
    CHECK(forced.uncertainty == UncertaintyStatus::Holds);
    CHECK(forced.product.witness.find("empty") != std::string::npos);
}

TEST_CASE("delta sampler rows are deterministic and match the fibers") {
    auto z2 = zmod(2);
    auto f2t = trunc_poly(z2, 2);
    auto F = EvaluableFunctor::representable(f2t);
    auto f2e = algebra::dual_numbers(z2).total;
    std::vector<SamplerEntry> universe;
    universe.push_back({"Z/2", "free", 0, z2, algebra::modules::free_rank_one(z2)});
    universe.push_back({"Z/2", "zero", 0, z2, algebra::modules::zero_module(z2)});
    universe.push_back({"F2[e]", "free", 0, f2e, algebra::modules::free_rank_one(f2e)});
    auto rows = delta_sampler(F, universe);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].pi0 == 2);
    CHECK(rows[1].pi0 == 1);
    CHECK(rows[1].verdict == std::string("contractible"));
    CHECK(rows[2].pi0 == 4);  // lifts t -> (0, m) for the four m in F2[e]
    auto rows2 = delta_sampler(F, universe);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].pi0 == rows2[i].pi0);
        CHECK(rows[i].verdict == rows2[i].verdict);
    }

    auto empty_rows = delta_sampler(F, {});
    CHECK(empty_rows.empty());
}
