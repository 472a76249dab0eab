#include <doctest.h>

#include <functional>

#include "branekit/algebra/extension.hpp"
#include "branekit/algebra/homs.hpp"
#include "branekit/algebra/module.hpp"
#include "branekit/algebra/ring.hpp"

using namespace branekit;
using namespace branekit::algebra;

namespace {

/* Test-only oracle: plain elementwise backtracking over full image tables,
 * no closure propagation. Independent of enumerate_homs. */
int oracle_count_homs(const FiniteCommRing& B, const FiniteCommRing& C) {
    std::vector<int> img(B.size(), -1);
    int count = 0;
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
            RingHom h{B, C, img};
            if (is_ring_hom(h))
                ++count;
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
    return count;
}

}  // namespace

TEST_CASE("zmod rings validate") {
    CHECK(validate_ring(rings::zmod(4)).ok());
    CHECK(validate_ring(rings::zmod(1)).ok());
    CHECK(validate_ring(rings::zero_ring()).ok());
    CHECK(rings::zmod(1).is_zero_ring());
}

TEST_CASE("injected table fault is caught with witness") {
    auto z4 = rings::zmod(4);
    std::vector<std::vector<int>> add(4, std::vector<int>(4)), mul(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            add[a][b] = z4.add(a, b);
            mul[a][b] = z4.mul(a, b);
        }
    mul[2][3] = 1;  // breaks 2*3 = 2
    FiniteCommRing broken("broken", {"0", "1", "2", "3"}, add, mul, 0, 1);
    auto rep = validate_ring(broken);
    CHECK(!rep.ok());
    bool witness_23 = false;
    for (const auto& v : rep.violations)
        if (v.witness.find("2,3") != std::string::npos)
            witness_23 = true;
    CHECK(witness_23);
}

TEST_CASE("F2[t]/(t^2) validates and has the expected structure") {
    auto f2t = rings::trunc_poly(rings::zmod(2), 2);
    CHECK(f2t.size() == 4);
    CHECK(validate_ring(f2t).ok());
    // t^2 = 0: t is element (0,1) which encodes as 2 in little-endian coefficient order
    int t = -1;
    for (int a = 0; a < 4; ++a)
        if (f2t.elem_name(a) == "1t")
            t = a;
    REQUIRE(t >= 0);
    CHECK(f2t.mul(t, t) == f2t.zero());
}

TEST_CASE("module builders validate") {
    auto z4 = rings::zmod(4);
    CHECK(validate_module(modules::zero_module(z4)).ok());
    CHECK(validate_module(modules::free_rank_one(z4)).ok());
    CHECK(validate_module(modules::cyclic(z4, 2)).ok());
    CHECK_THROWS_AS(modules::cyclic(z4, 3), InputError);
}

TEST_CASE("square-zero extension of Z/2 by Z/2") {
    auto z2 = rings::zmod(2);
    auto ext = square_zero_extend(z2, modules::free_rank_one(z2));
    CHECK(ext.total.size() == 4);
    CHECK(validate_ring(ext.total).ok());
    // (1,1)*(1,1) = (1, 1+1) = (1,0)
    CHECK(ext.total.mul(ext.encode(1, 1), ext.encode(1, 1)) == ext.encode(1, 0));
    // (0,m)*(0,m') = (0,0)
    CHECK(ext.total.mul(ext.encode(0, 1), ext.encode(0, 1)) == ext.total.zero());
    CHECK(is_ring_hom(ext.projection));
    CHECK(is_ring_hom(ext.splitting));
}

TEST_CASE("square-zero extension by zero module is an isomorphism") {
    auto z2 = rings::zmod(2);
    auto ext = square_zero_extend(z2, modules::zero_module(z2));
    CHECK(ext.total.size() == 2);
    CHECK(is_iso(ext.projection));
}

TEST_CASE("square-zero multiplication law over Z/3") {
    auto z3 = rings::zmod(3);
    auto ext = square_zero_extend(z3, modules::free_rank_one(z3));
    // (1,2)*(2,1) = (2, 1*1 + 2*2) = (2,2)
    CHECK(ext.total.mul(ext.encode(1, 2), ext.encode(2, 1)) == ext.encode(2, 2));
    // exhaustive law check
    for (int a = 0; a < 3; ++a)
        for (int m = 0; m < 3; ++m)
            for (int b = 0; b < 3; ++b)
                for (int k = 0; k < 3; ++k)
                    CHECK(ext.total.mul(ext.encode(a, m), ext.encode(b, k)) ==
                          ext.encode((a * b) % 3, (a * k + b * m) % 3));
}

TEST_CASE("module over wrong ring is rejected") {
    auto z2 = rings::zmod(2);
    auto z3 = rings::zmod(3);
    CHECK_THROWS_AS(square_zero_extend(z2, modules::free_rank_one(z3)), InputError);
}

TEST_CASE("dual numbers") {
    auto z2 = rings::zmod(2);
    auto d = dual_numbers(z2);
    CHECK(d.total.size() == 4);
    CHECK(validate_ring(d.total).ok());

    auto z3 = rings::zmod(3);
    auto d3 = dual_numbers(z3);
    CHECK(d3.total.size() == 9);
    // (1+e)(1+2e) = 1 + 3e = 1 in Z/3
    int one_e = -1, one_2e = -1;
    for (int a = 0; a < 9; ++a) {
        if (d3.total.elem_name(a) == "1+e")
            one_e = a;
        if (d3.total.elem_name(a) == "1+2e")
            one_2e = a;
    }
    REQUIRE(one_e >= 0);
    REQUIRE(one_2e >= 0);
    CHECK(d3.total.mul(one_e, one_2e) == d3.total.one());

    auto d0 = dual_numbers(rings::zero_ring());
    CHECK(d0.total.size() == 1);

    // identity-on-carrier isomorphism against the square-zero construction
    auto ext = square_zero_extend(z3, modules::free_rank_one(z3));
    CHECK(d3.total.same_tables(ext.total));
}

TEST_CASE("retraction and square-zero kernel for every (A,M) in a small universe") {
    std::vector<FiniteCommRing> As = {rings::zmod(2), rings::zmod(3), rings::zmod(4),
                                      rings::trunc_poly(rings::zmod(2), 2)};
    for (const auto& A : As) {
        std::vector<FiniteModule> Ms = {modules::zero_module(A), modules::free_rank_one(A)};
        for (const auto& M : Ms) {
            auto ext = square_zero_extend(A, M);
            auto r = compose(ext.projection, ext.splitting);
            for (int a = 0; a < A.size(); ++a)
                CHECK(r.map[a] == a);
            // kernel of projection squares to zero
            for (int x = 0; x < ext.total.size(); ++x)
                for (int y = 0; y < ext.total.size(); ++y)
                    if (ext.projection.map[x] == A.zero() && ext.projection.map[y] == A.zero())
                        CHECK(ext.total.mul(x, y) == ext.total.zero());
        }
    }
}

TEST_CASE("hom enumeration matches the stated examples") {
    auto z2 = rings::zmod(2);
    auto f2t = rings::trunc_poly(z2, 2);
    auto f2e = dual_numbers(z2).total;

    CHECK(enumerate_homs(z2, z2).size() == 1);
    CHECK(enumerate_homs(f2t, z2).size() == 1);
    CHECK(enumerate_homs(f2t, f2e).size() == 2);
}

TEST_CASE("hom enumeration agrees with the brute-force oracle") {
    auto z2 = rings::zmod(2);
    auto z3 = rings::zmod(3);
    auto z4 = rings::zmod(4);
    auto z6 = rings::zmod(6);
    auto f2t = rings::trunc_poly(z2, 2);
    auto z2z2 = rings::product(z2, z2);
    std::vector<FiniteCommRing> Bs = {z2, z3, z4, f2t, z2z2};
    std::vector<FiniteCommRing> Cs = {z2, z3, z4, z6, f2t, z2z2};
    for (const auto& B : Bs)
        for (const auto& C : Cs)
            CHECK(enumerate_homs(B, C).size() == static_cast<size_t>(oracle_count_homs(B, C)));
}

TEST_CASE("every hom B -> A lifts along the splitting") {
    auto z2 = rings::zmod(2);
    auto f2t = rings::trunc_poly(z2, 2);
    std::vector<FiniteCommRing> Bs = {z2, f2t, rings::zmod(4)};
    std::vector<FiniteCommRing> As = {z2, rings::zmod(3), f2t};
    for (const auto& B : Bs)
        for (const auto& A : As) {
            auto ext = square_zero_extend(A, modules::free_rank_one(A));
            auto base = enumerate_homs(B, A);
            auto lifted = enumerate_homs(B, ext.total);
            CHECK(lifted.size() >= base.size());
            for (const auto& h : base) {
                auto up = compose(ext.splitting, h);
                bool found = false;
                for (const auto& l : lifted)
                    if (l.map == up.map)
                        found = true;
                CHECK(found);
            }
        }
}
