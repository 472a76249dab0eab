#pragma once

#include "branekit/simplicial/homology.hpp"
#include "branekit/simplicial/simplicial_set.hpp"

namespace branekit::simplicial {

enum class Status { Contractible, NonContractible, Inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Contractible: return "contractible";
        case Status::NonContractible: return "non-contractible";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct HomotopyVerdict {
    Status status;
    std::string witness;
};

/* Path components: the coequalizer of d_0, d_1 on vertices. */
int pi0(const SimplicialSet& X);

/* Greedy elementary collapse on nondegenerate simplices. True when the space
 * collapses to a single vertex; false is not a negative verdict. */
bool collapses_to_point(const SimplicialSet& X);

/* Decision procedure:
 *   non-contractible: empty, pi0 != 1, or nonzero reduced homology below the
 *   reliable range; contractible: only with a cone certificate or a full collapse;
 *   otherwise inconclusive. reliable_dim < dim marks levels above it as
 *   undetermined (truncation-limited constructions). */
HomotopyVerdict contractibility(const SimplicialSet& X, int reliable_dim = -1);

}  // namespace branekit::simplicial
