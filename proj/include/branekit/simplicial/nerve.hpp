#pragma once

#include "branekit/category.hpp"
#include "branekit/simplicial/simplicial_map.hpp"

namespace branekit::simplicial {

/* Nerve of a finite category, truncated. Level-n simplices are composable chains
 * (f_1,...,f_n), lexicographically ordered by morphism ids; level 0 is the object set.
 * chains[n][idx] is the tuple (size n; size 1 holding the object at level 0). */
struct Nerve {
    FiniteCategory category;
    SimplicialSet space;
    std::vector<std::vector<std::vector<int>>> chains;

    int index_of(int n, const std::vector<int>& chain) const;
};

Nerve nerve(const FiniteCategory& C, int dim, int level_cap = 200000);

/* Nerve of a functor as a SimplicialMap carrying NerveFunctorData. */
SimplicialMap nerve_map(const Nerve& src, const Nerve& tgt, const CatFunctor& F);

}  // namespace branekit::simplicial
