#pragma once

#include "branekit/functors/energy.hpp"
#include "branekit/site/hypercover.hpp"
#include "branekit/site/topology.hpp"

namespace branekit::functors {

struct AxiomVerdict {
    CheckStatus status = CheckStatus::Skipped;
    std::string witness;
};

/* Field order mirrors the proof order; consequence checks only run when their
 * prerequisites pass and otherwise report Skipped naming the failed one. */
struct AxiomReport {
    AxiomVerdict preserves_covers;
    AxiomVerdict reflects_covers;
    AxiomVerdict preserves_pullbacks;
    AxiomVerdict preserves_factorizations;
    AxiomVerdict setdelta_equivariance;
    AxiomVerdict exponential_lemma;
    AxiomVerdict preserves_hfp;
    AxiomVerdict preserves_hypercovers;
    AxiomVerdict descent;

    std::vector<std::pair<std::string, const AxiomVerdict*>> entries() const;
    std::vector<std::string> failed_axioms() const;
    /* A consequence check failing while its prerequisites pass. */
    bool consequence_violation() const;
};

struct EquivarianceSample {
    std::string name;
    simplicial::SimplicialSet K;
    SimplicialObject A;
};

/* Deterministic seeded sample list: small exponents against constant objects
 * and Cech nerves of single-map covers of the source site. */
std::vector<EquivarianceSample> default_samples(const FiniteSite& src, std::uint64_t seed,
                                                int max_samples, const Caps& caps = {});

AxiomVerdict check_preserves_covers(const EnergyFunctor& E);
AxiomVerdict check_reflects_covers(const EnergyFunctor& E);
AxiomVerdict check_preserves_pullbacks(const EnergyFunctor& E);
AxiomVerdict check_preserves_factorizations(const EnergyFunctor& E);
AxiomVerdict check_setdelta_equivariance(const EnergyFunctor& E,
                                         const std::vector<EquivarianceSample>& samples,
                                         const Caps& caps = {});
AxiomVerdict check_exponential_lemma(const EnergyFunctor& E,
                                     const std::vector<EquivarianceSample>& samples,
                                     const Caps& caps = {});
AxiomVerdict check_preserves_hfp(const EnergyFunctor& E, const Caps& caps = {});
AxiomVerdict check_preserves_hypercovers(const EnergyFunctor& E, int up_to,
                                         const Caps& caps = {});

/* The whole suite in proof order with gating. */
AxiomReport run_axiom_suite(const EnergyFunctor& E, std::uint64_t seed, int up_to,
                            const Caps& caps = {});

/* Transported topology on the image site. */
site::TopologyReport check_topology_transport(const EnergyFunctor& E, const Caps& caps = {});

/* Ring-labeled site whose morphisms invert ring homomorphisms. */
struct AffSite {
    FiniteSite site;
    std::vector<FiniteCommRing> rings;  // per object
    std::vector<RingHom> homs;          // per morphism m: ring(tgt m) -> ring(src m)
};

AffSite build_aff_site(const std::vector<FiniteCommRing>& rings,
                       const std::vector<std::vector<site::CoverFamily>>& covers,
                       const Caps& caps = {});
/* Declare the pullback of a cospan found by exhaustive cone search. */
void declare_pullback_by_search(AffSite& A, int f, int g, const Caps& caps = {});

/* Descent along a 1-truncated hypercover in an Aff-style site: compares F(base)
 * with the equalizer of F(A_0) => F(A_1). Discrete-valued functors only. */
AxiomVerdict check_descent(const EvaluableFunctor& F, const AffSite& A,
                           const AugmentedSimplicialObject& H, const Caps& caps = {});

}  // namespace branekit::functors
