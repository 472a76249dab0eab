#pragma once

#include "branekit/site/simplicial_object.hpp"

namespace branekit::site {

struct HypercoverLevel {
    int level;
    CheckStatus status;
    std::string detail;  // comparison morphism or the reason for inconclusive
};

struct HypercoverReport {
    std::vector<HypercoverLevel> levels;
    bool ok() const {
        for (const auto& l : levels)
            if (l.status != CheckStatus::Pass)
                return false;
        return !levels.empty();
    }
};

/* Per level n <= up_to, forms the comparison of X_n with the limit of the
 * boundary diagram over the augmentation target and asks whether the singleton
 * family through it is a covering (isomorphisms always cover). Missing limits
 * mark the level inconclusive with the diagnostic. */
HypercoverReport is_hypercover(const FiniteSite& S, const AugmentedSimplicialObject& X,
                               int up_to, const Caps& caps = {});

}  // namespace branekit::site
