#pragma once

#include "branekit/simplicial/simplicial_set.hpp"

namespace branekit::simplicial {

/* Reduced integral homology of the normalized chain complex, degrees 0..dim-1.
 * Degree dim of the truncation has no incoming boundaries, so it is excluded from
 * betti/torsion and only its kernel rank is recorded for the Euler check. */
struct ChainComplexReport {
    std::vector<int> betti;                       // reduced betti numbers, degree 0..dim-1
    std::vector<std::vector<long long>> torsion;  // invariant factors > 1 per degree
    int top_kernel_rank = 0;                      // rank ker(d_dim) in the truncated complex
    long long euler_simplices = 0;                // alternating nondegenerate simplex count
    long long euler_homology = 0;                 // from betti numbers of the truncated complex

    bool trivial_up_to(int deg) const;  // no betti/torsion in degrees <= deg
};

ChainComplexReport reduced_homology(const SimplicialSet& X);

/* Smith normal form utility: returns the invariant factors (positive, dividing
 * in sequence) of an integer matrix given as rows. */
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m);

}  // namespace branekit::simplicial
