#pragma once

#include "branekit/functors/evaluable.hpp"
#include "branekit/site/simplicial_object.hpp"

namespace branekit::functors {

using site::AugmentedSimplicialObject;
using site::FiniteSite;
using site::SimplicialObject;

/* Functor between finite sites (validated on construction) together with the
 * algebra-side action used by brane composition and deformation checks. */
struct EnergyFunctor {
    std::string name;
    FiniteSite source, target;
    std::vector<int> obj_map, mor_map;
    AlgebraAction action;

    EnergyFunctor(std::string nm, FiniteSite src, FiniteSite tgt, std::vector<int> objs,
                  std::vector<int> mors, AlgebraAction act = {});

    SimplicialObject map_object(const SimplicialObject& X) const;
    AugmentedSimplicialObject map_object(const AugmentedSimplicialObject& X) const;
};

EnergyFunctor identity_energy(const FiniteSite& S, std::string name);
/* Same object/morphism structure, different target site (e.g. other covers). */
EnergyFunctor identity_on_objects(std::string name, const FiniteSite& src,
                                  const FiniteSite& tgt);
/* Poset functor determined by a monotone object map. */
EnergyFunctor poset_energy(std::string name, const FiniteSite& src, const FiniteSite& tgt,
                           const std::vector<int>& obj_map);

struct Brane {
    EnergyFunctor energy;
    EvaluableFunctor observable;
    EvaluableFunctor composite;
};

/* The factorization F = V o E; evaluate(composite, A) = evaluate(V, E A). */
Brane compose_brane(const EvaluableFunctor& V, const EnergyFunctor& E);

}  // namespace branekit::functors
