#pragma once

#include "branekit/simplicial/cotensor.hpp"
#include "branekit/simplicial/nerve.hpp"

namespace branekit::simplicial {

/* One application of the subdivision-adjoint construction:
 * Ex(X)_n = maps(sd Delta^n -> X), sd Delta^n the nerve of the poset of
 * nonempty subsets of [n]. */
struct ExResult {
    SimplicialSet space;
    SimplicialMap inclusion;  // the natural levelwise injection X -> Ex X
    std::vector<std::vector<MapTable>> elements;
};

ExResult ex_once(const SimplicialSet& X, const Caps& caps = {});

/* k-fold iteration; k = 0 returns X with the identity inclusion. */
ExResult ex_k(const SimplicialSet& X, int k, const Caps& caps = {});

/* Functorial action Ex^k(g): Ex^k(Y) -> Ex^k(Y'), built by postcomposition. */
SimplicialMap ex_k_functorial(const SimplicialMap& g, int k, const Caps& caps = {});

}  // namespace branekit::simplicial
