#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "branekit/entropy/entropy.hpp"
#include "branekit/functors/checks.hpp"
#include "branekit/simplicial/simplicial_set.hpp"

namespace branekit::io {

using json = nlohmann::json;

/* Named-entity environment a scenario resolves references against. */
struct Env {
    Caps caps;
    std::map<std::string, algebra::FiniteCommRing> rings;
    std::map<std::string, algebra::FiniteModule> modules;
    std::map<std::string, simplicial::SimplicialSet> spaces;
    std::map<std::string, site::FiniteSite> sites;
    std::map<std::string, functors::EnergyFunctor> energies;
    std::map<std::string, functors::EvaluableFunctor> functors;
    std::map<std::string, functors::Brane> branes;
    std::map<std::string, entropy::StateSystem> systems;
    std::map<std::string, entropy::FuzzConfig> fuzz;

    const algebra::FiniteCommRing& ring(const std::string& name) const;
    const algebra::FiniteModule& module(const std::string& name) const;
    const simplicial::SimplicialSet& space(const std::string& name) const;
    const site::FiniteSite& site_named(const std::string& name) const;
    const functors::EnergyFunctor& energy(const std::string& name) const;
    const functors::EvaluableFunctor& functor(const std::string& name) const;
    const functors::Brane& brane(const std::string& name) const;
    const entropy::StateSystem& system(const std::string& name) const;
    const entropy::FuzzConfig& fuzz_of(const std::string& name) const;
};

algebra::FiniteCommRing make_ring(const json& j, const Env& env);
algebra::FiniteModule make_module(const json& j, const Env& env);
simplicial::SimplicialSet make_space(const json& j, const Env& env);
site::FiniteSite make_site(const json& j, const Env& env);
functors::EnergyFunctor make_energy(const std::string& name, const json& j, const Env& env);
functors::EvaluableFunctor make_functor(const json& j, const Env& env);
entropy::FuzzConfig make_fuzz(const json& j);

/* Populate an Env from a scenario document's entity sections. */
Env build_env(const json& scenario, const Caps& caps);

/* The documented scenario / entity schema, as printed by the schema command. */
std::string schema_text();

}  // namespace branekit::io
