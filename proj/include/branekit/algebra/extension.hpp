#pragma once

#include "branekit/algebra/homs.hpp"
#include "branekit/algebra/module.hpp"

namespace branekit::algebra {

/* The ring A + M on pairs (a,m) with (a,m)(a',m') = (aa', am' + a'm).
 * Pair (a,m) is encoded as a*|M| + m. */
struct SquareZeroExtension {
    FiniteCommRing base;    // A
    FiniteModule module;    // M
    FiniteCommRing total;   // A + M
    RingHom projection;     // A + M -> A
    RingHom splitting;      // A -> A + M, a -> (a,0)

    int encode(int a, int m) const { return a * module.size() + m; }
    std::pair<int, int> decode(int p) const { return {p / module.size(), p % module.size()}; }
};

SquareZeroExtension square_zero_extend(const FiniteCommRing& A, const FiniteModule& M,
                                       const Caps& caps = {});

/* A[e] with e^2 = 0, built as the square-zero extension of A by the free
 * rank-one module; the tables match trunc_poly(A, 2) on the nose. */
struct DualNumbers {
    FiniteCommRing base;    // A
    FiniteCommRing total;   // A[e]
    RingHom augmentation;   // A[e] -> A, e -> 0
    RingHom unit;           // A -> A[e]
};

DualNumbers dual_numbers(const FiniteCommRing& A, const Caps& caps = {});

}  // namespace branekit::algebra
