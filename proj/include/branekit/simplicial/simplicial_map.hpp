#pragma once

#include <optional>

#include "branekit/category.hpp"
#include "branekit/simplicial/simplicial_set.hpp"

namespace branekit::simplicial {

/* Provenance: this map is the nerve of a functor. Enables the comma-category
 * branch of homotopy_fiber. */
struct NerveFunctorData {
    FiniteCategory source_cat, target_cat;
    std::vector<int> obj_map, mor_map;
};

struct SimplicialMap {
    SimplicialSet source, target;
    std::vector<std::vector<int>> levels;  // levels[n][s] -> target simplex id
    std::optional<NerveFunctorData> nerve_data;

    int operator()(int n, int s) const { return levels[n][s]; }
    bool is_levelwise_bijection() const;
};

ValidationReport validate(const SimplicialMap& f);
SimplicialMap identity_map(const SimplicialSet& X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f
/* product(f,g): product(X,Y) -> product(X',Y'). */
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g);
/* Constant map at a vertex of the target. */
SimplicialMap constant_map(const SimplicialSet& X, const SimplicialSet& Y, int vertex);
/* The n-fold degenerate image of a vertex at level n. */
int degenerate_vertex(const SimplicialSet& Y, int vertex, int n);

}  // namespace branekit::simplicial
