#pragma once

#include "branekit/simplicial/simplicial_set.hpp"
#include "branekit/site/site.hpp"

namespace branekit::site {

/* Simplicial object in a site, truncated: per-level objects plus face and
 * degeneracy morphisms of the underlying category. */
struct SimplicialObject {
    int dim;
    std::vector<int> objects;                // objects[n], 0..dim
    std::vector<std::vector<int>> faces;     // faces[n][i]: X_n -> X_{n-1}, n >= 1
    std::vector<std::vector<int>> degens;    // degens[n][i]: X_n -> X_{n+1}, n < dim
};

ValidationReport validate(const FiniteSite& S, const SimplicialObject& X);

/* Constant simplicial object on one site object. */
SimplicialObject constant_object(const FiniteSite& S, int obj, int dim);

/* X(alpha): X_n -> X_m for a monotone operator alpha: [m] -> [n]. */
int so_act(const FiniteSite& S, const SimplicialObject& X, const std::vector<int>& alpha, int n);

/* Levelwise coproduct indexed by the simplices of K, with mediated faces. */
SimplicialObject tensor(const FiniteSite& S, const branekit::simplicial::SimplicialSet& K,
                        const SimplicialObject& Y);

/* Finite diagram in the site and its limit, found by exhaustive cone search. */
struct Diagram {
    std::vector<int> objects;                    // node -> site object
    std::vector<std::array<int, 3>> arrows;      // (from node, to node, morphism)
    std::vector<int> order;                      // node assignment order for the search
};

struct Cone {
    int apex;
    std::vector<int> legs;
};

std::optional<Cone> limit_cone(const FiniteSite& S, const Diagram& dg, const Caps& caps = {});

/* (X^K)_0 as the limit over the category of simplices of K. */
struct CotensorLevel {
    Cone cone;
    std::vector<std::pair<int, int>> nodes;  // (level, K-simplex) per diagram node
};
CotensorLevel cotensor_level(const FiniteSite& S, const SimplicialObject& X,
                             const branekit::simplicial::SimplicialSet& K,
                             const Caps& caps = {});

/* Augmented simplicial object X_* -> Y; the augmentation must coequalize d_0, d_1. */
struct AugmentedSimplicialObject {
    SimplicialObject levels;
    int base;          // Y
    int augmentation;  // X_0 -> Y
};

ValidationReport validate(const FiniteSite& S, const AugmentedSimplicialObject& X);

/* Cech nerve of a single covering map u: U -> X, truncated at up_to. */
AugmentedSimplicialObject cech_nerve(const FiniteSite& S, int u, int up_to,
                                     const Caps& caps = {});

}  // namespace branekit::site
