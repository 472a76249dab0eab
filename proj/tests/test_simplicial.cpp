#include <doctest.h>

#include "branekit/simplicial/cotensor.hpp"
#include "branekit/simplicial/ex.hpp"
#include "branekit/simplicial/fiber.hpp"
#include "branekit/simplicial/nerve.hpp"
#include "branekit/simplicial/verdict.hpp"

using namespace branekit;
using namespace branekit::simplicial;

namespace {
constexpr int D = 4;
}

TEST_CASE("standard simplices validate") {
    for (int n = 0; n <= 3; ++n) {
        auto dn = spaces::delta(n, D);
        CHECK(validate(dn).ok());
        CHECK(dn.count(0) == n + 1);
        auto bd = spaces::boundary_delta(n, D);
        CHECK(validate(bd).ok());
    }
    CHECK(validate(spaces::empty_space(D)).ok());
    CHECK(validate(spaces::discrete(3, D)).ok());
}

TEST_CASE("a broken face table fails validation with a witness") {
    auto d1 = spaces::delta(1, 2);
    // rebuild with d_0 and d_1 of the nondegenerate edge swapped against composites
    std::vector<int> counts = {2, 3, 4};
    std::vector<std::vector<std::vector<int>>> faces(3), degens(2);
    faces[1].assign(2, std::vector<int>(3));
    for (int i = 0; i < 2; ++i)
        for (int s = 0; s < 3; ++s)
            faces[1][i][s] = d1.face(1, i, s);
    faces[2].assign(3, std::vector<int>(4));
    for (int i = 0; i < 3; ++i)
        for (int s = 0; s < 4; ++s)
            faces[2][i][s] = d1.face(2, i, s);
    degens[0].assign(1, std::vector<int>(2));
    for (int s = 0; s < 2; ++s)
        degens[0][0][s] = d1.degen(0, 0, s);
    degens[1].assign(2, std::vector<int>(3));
    for (int i = 0; i < 2; ++i)
        for (int s = 0; s < 3; ++s)
            degens[1][i][s] = d1.degen(1, i, s);
    faces[2][0][1] = faces[2][0][1] == 0 ? 1 : 0;  // corrupt one entry
    SimplicialSet broken(2, counts, faces, degens);
    CHECK(!validate(broken).ok());
}

TEST_CASE("nerve of Z/2 validates and has one nondegenerate simplex per level") {
    auto nv = nerve(cat::cyclic_group(2), 3);
    CHECK(validate(nv.space).ok());
    for (int n = 1; n <= 3; ++n) {
        CHECK(nv.space.count(n) == 1 << n);
        CHECK(nv.space.nondegenerate_count(n) == 1);
    }
}

TEST_CASE("nerve of the terminal category is a point") {
    auto nv = nerve(cat::terminal(), D);
    for (int n = 0; n <= D; ++n) {
        CHECK(nv.space.count(n) == 1);
        CHECK(nv.space.nondegenerate_count(n) == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("product: unit, discrete case, and Delta1 x Delta1 counts") {
    auto d1 = spaces::delta(1, 2);
    auto pt = spaces::delta(0, 2);
    auto p = product(d1, pt);
    for (int n = 0; n <= 2; ++n)
        CHECK(p.count(n) == d1.count(n));

    auto a = spaces::discrete(2, D);
    auto b = spaces::discrete(3, D);
    auto ab = product(a, b);
    CHECK(ab.count(0) == 6);
    CHECK(ab.is_discrete());

    auto sq = product(spaces::delta(1, 2), spaces::delta(1, 2));
    CHECK(validate(sq).ok());
    CHECK(sq.count(0) == 4);
    CHECK(sq.count(1) == 9);
    CHECK(sq.nondegenerate_count(1) == 5);
    CHECK(sq.nondegenerate_count(2) == 2);
}

TEST_CASE("pi0 examples") {
    CHECK(pi0(spaces::boundary_delta(1, D)) == 2);
    CHECK(pi0(spaces::delta(2, D)) == 1);
    CHECK(pi0(spaces::empty_space(D)) == 0);
    CHECK(pi0(nerve(cat::cyclic_group(2), 3).space) == 1);
}

TEST_CASE("reduced homology: boundary of a 2-simplex is a circle") {
    auto bd = spaces::boundary_delta(2, D);
    auto rep = reduced_homology(bd);
    CHECK(rep.betti[0] == 0);
    CHECK(rep.betti[1] == 1);
    CHECK(rep.torsion[1].empty());
    CHECK(rep.euler_simplices == rep.euler_homology);
}

TEST_CASE("reduced homology: nerve of Z/2 has H_1 = Z/2 torsion") {
    auto nv = nerve(cat::cyclic_group(2), 3);
    auto rep = reduced_homology(nv.space);
    CHECK(rep.betti[0] == 0);
    CHECK(rep.betti[1] == 0);
    REQUIRE(rep.torsion[1].size() == 1);
    CHECK(rep.torsion[1][0] == 2);
    CHECK(rep.euler_simplices == rep.euler_homology);
}

TEST_CASE("reduced homology: nerve of Z/3 shows torsion in degrees 1 and 3") {
    auto nv = nerve(cat::cyclic_group(3), D);
    auto rep = reduced_homology(nv.space);
    CHECK(rep.betti[0] == 0);
    REQUIRE(rep.torsion[1].size() == 1);
    CHECK(rep.torsion[1][0] == 3);
    CHECK(rep.torsion[2].empty());
    REQUIRE(rep.torsion[3].size() == 1);
    CHECK(rep.torsion[3][0] == 3);
    CHECK(rep.euler_simplices == rep.euler_homology);
}

TEST_CASE("contractibility verdicts") {
    CHECK(contractibility(spaces::delta(0, D)).status == Status::Contractible);
    CHECK(contractibility(spaces::empty_space(D)).status == Status::NonContractible);
    auto nz2 = contractibility(nerve(cat::cyclic_group(2), 3).space);
    CHECK(nz2.status == Status::NonContractible);
    CHECK(nz2.witness.find("torsion Z/2") != std::string::npos);
    CHECK(contractibility(spaces::delta(3, D)).status == Status::Contractible);
    CHECK(contractibility(spaces::boundary_delta(2, D)).status == Status::NonContractible);
    CHECK(contractibility(spaces::discrete(2, D)).status == Status::NonContractible);
}

TEST_CASE("collapse certificate works without cone flags") {
    auto sq = product(spaces::delta(1, D), spaces::delta(1, D));
    sq.set_cone(std::nullopt);
    CHECK(collapses_to_point(sq));
    CHECK(contractibility(sq).status == Status::Contractible);
    CHECK(!collapses_to_point(spaces::boundary_delta(2, D)));
}

TEST_CASE("operator action on delta matches precomposition of sequences") {
    auto d2 = spaces::delta(2, D);
    // simplices of delta(2) at level n are monotone sequences; act must precompose
    for (int n = 1; n <= 3; ++n) {
        auto seqs = spaces::monotone_sequences(n, 2);
        for (int m = 0; m <= n; ++m) {
            auto ops = spaces::monotone_sequences(m, n);
            for (const auto& alpha : ops)
                for (size_t s = 0; s < seqs.size(); ++s) {
                    std::vector<int> expect(alpha.size());
                    for (size_t q = 0; q < alpha.size(); ++q)
                        expect[q] = seqs[s][alpha[q]];
                    const int got = act(d2, alpha, n, static_cast<int>(s));
                    CHECK(got == spaces::monotone_rank(expect, 2));
                }
        }
    }
}

TEST_CASE("cotensor: unit, discrete exponents, and two-point boundary") {
    auto x = product(spaces::delta(1, 3), spaces::discrete(2, 3));
    auto unit = cotensor(x, spaces::delta(0, 3));
    for (int n = 0; n <= 3; ++n) {
        CHECK(unit.space.count(n) == x.count(n));
        CHECK(unit.determined[n]);
    }
    CHECK(validate(unit.space).ok());

    auto disc = cotensor(spaces::discrete(2, 3), spaces::delta(1, 3));
    CHECK(disc.space.is_discrete());
    CHECK(disc.space.count(0) == 2);

    auto sq = cotensor(x, spaces::boundary_delta(1, 3));
    CHECK(sq.space.count(0) == x.count(0) * x.count(0));
}

TEST_CASE("maps from a connected exponent into a discrete space are constant") {
    auto k = spaces::delta(1, 3);
    auto two = spaces::discrete(2, 3);
    auto c = cotensor(two, k);
    for (int n = 0; n <= 3; ++n)
        CHECK(c.space.count(n) == 2);
}

TEST_CASE("Ex fixes points and discrete spaces") {
    auto e0 = ex_once(spaces::delta(0, 3));
    for (int n = 0; n <= 3; ++n)
        CHECK(e0.space.count(n) == 1);
    auto ed = ex_once(spaces::boundary_delta(1, 3));
    CHECK(ed.space.count(0) == 2);
    CHECK(ed.space.is_discrete());
    auto ek = ex_k(spaces::boundary_delta(1, 3), 0);
    CHECK(ek.space.count(0) == 2);
}

TEST_CASE("Ex of Delta1 keeps vertices, gains zigzag edges, inclusion injective") {
    auto e = ex_once(spaces::delta(1, 2));
    CHECK(validate(e.space).ok());
    CHECK(e.space.count(0) == 2);  // Ex(X)_0 = maps(point -> X) = X_0
    CHECK(e.space.count(1) == 5);  // poset maps sd[1] -> [1]: 4 with peak at 1, 1 constant
    REQUIRE(validate(e.inclusion).ok());
    // levelwise injection
    for (int n = 0; n <= 2; ++n) {
        std::vector<char> seen(e.space.count(n), 0);
        for (int v : e.inclusion.levels[n]) {
            CHECK(!seen[v]);
            seen[v] = 1;
        }
    }
}

TEST_CASE("homotopy fiber, discrete branch") {
    auto five = spaces::discrete(5, D);
    auto two = spaces::discrete(2, D);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        lv[n] = {0, 0, 0, 1, 1};
    SimplicialMap f{five, two, lv, std::nullopt};
    REQUIRE(validate(f).ok());
    auto fib = homotopy_fiber(f, 0);
    CHECK(fib.branch == FiberBranch::Discrete);
    CHECK(fib.space.count(0) == 3);
    auto fib1 = homotopy_fiber(f, 1);
    CHECK(fib1.space.count(0) == 2);
}

TEST_CASE("homotopy fiber of an identity map is contractible") {
    auto x = spaces::discrete(4, D);
    auto fib = homotopy_fiber(identity_map(x), 2);
    CHECK(fib.space.count(0) == 1);
    CHECK(fib.verdict().status == Status::Contractible);

    auto nv = nerve(cat::cyclic_group(2), 3);
    CatFunctor idf(nv.category, nv.category, {0}, {0, 1});
    auto idm = nerve_map(nv, nv, idf);
    auto fib2 = homotopy_fiber(idm, 0);
    CHECK(fib2.branch == FiberBranch::CommaNerve);
    CHECK(fib2.verdict().status == Status::Contractible);
}

TEST_CASE("homotopy fiber of point -> nerve(Z/2) is two discrete points") {
    auto trivial = nerve(cat::terminal(), 3);
    auto bz2 = nerve(cat::cyclic_group(2), 3);
    CatFunctor inc(trivial.category, bz2.category, {0}, {0});
    auto f = nerve_map(trivial, bz2, inc);
    REQUIRE(validate(f).ok());
    auto fib = homotopy_fiber(f, 0);
    CHECK(fib.branch == FiberBranch::CommaNerve);
    CHECK(pi0(fib.space) == 2);
    CHECK(fib.space.nondegenerate_count(1) == 0);
    CHECK(fib.verdict().status == Status::NonContractible);
}

TEST_CASE("path-space branch agrees with the discrete branch on pi0") {
    auto five = spaces::discrete(5, D);
    auto two = spaces::discrete(2, D);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        lv[n] = {0, 0, 0, 1, 1};
    SimplicialMap f{five, two, lv, std::nullopt};
    auto a = homotopy_fiber(f, 0);
    auto c = homotopy_fiber(f, 0, Caps{}, FiberBranch::PathSpace);
    CHECK(c.branch == FiberBranch::PathSpace);
    CHECK(pi0(a.space) == pi0(c.space));
}

TEST_CASE("product preserves validity") {
    std::vector<SimplicialSet> suite = {spaces::delta(2, 3), spaces::boundary_delta(2, 3),
                                        spaces::discrete(3, 3),
                                        nerve(cat::cyclic_group(2), 3).space};
    for (const auto& x : suite)
        for (const auto& y : suite) {
            auto p = product(x, y);
            CHECK(validate(p).ok());
        }
}
