#pragma once

#include "branekit/site/site.hpp"

namespace branekit::site {

/* Per-axiom result of the Grothendieck-topology check. */
struct AxiomReportEntry {
    std::string axiom;
    CheckStatus status;
    std::string witness;
};

struct TopologyReport {
    std::vector<AxiomReportEntry> entries;
    bool ok() const {
        for (const auto& e : entries)
            if (e.status != CheckStatus::Pass)
                return false;
        return true;
    }
};

/* (i) isomorphisms cover, (ii) stability under composition, (iii) stability
 * under declared pullbacks. A pullback needed by (iii) but not declared raises
 * IncompleteError naming the cospan. */
TopologyReport check_topology_axioms(const FiniteSite& S, const Caps& caps = {});

/* The image site of a functor between the underlying categories: image objects
 * and morphisms, image pullbacks/coproducts/factorizations, image covers. */
FiniteSite image_site(const FiniteSite& src, const FiniteSite& tgt,
                      const std::vector<int>& obj_map, const std::vector<int>& mor_map);

}  // namespace branekit::site
