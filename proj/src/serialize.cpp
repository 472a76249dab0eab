#include "branekit/io/serialize.hpp"

#include <algorithm>

#include "branekit/simplicial/nerve.hpp"

namespace branekit::io {

using algebra::FiniteCommRing;
using algebra::FiniteModule;
using functors::EnergyFunctor;
using functors::EvaluableFunctor;
using simplicial::SimplicialSet;
using site::FiniteSite;

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw InputError("scenario: " + what);
}

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name,
                                      const char* kind) {
    auto it = m.find(name);
    if (it == m.end())
        bad(std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
}

std::string need_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        bad(std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

int need_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

site::PosetTopology topology_by_name(const std::string& t) {
    if (t == "join")
        return site::PosetTopology::JoinCovers;
    if (t == "contains_id")
        return site::PosetTopology::ContainsId;
    if (t == "dense_bottom")
        return site::PosetTopology::DenseAtBottom;
    if (t == "all_nonempty")
        return site::PosetTopology::AllNonempty;
    bad("unknown topology '" + t + "'");
}

}  // namespace

const FiniteCommRing& Env::ring(const std::string& n) const { return lookup(rings, n, "ring"); }
const FiniteModule& Env::module(const std::string& n) const {
    return lookup(modules, n, "module");
}
const SimplicialSet& Env::space(const std::string& n) const { return lookup(spaces, n, "space"); }
const FiniteSite& Env::site_named(const std::string& n) const { return lookup(sites, n, "site"); }
const EnergyFunctor& Env::energy(const std::string& n) const {
    return lookup(energies, n, "energy");
}
const EvaluableFunctor& Env::functor(const std::string& n) const {
    return lookup(functors, n, "functor");
}
const functors::Brane& Env::brane(const std::string& n) const {
    return lookup(branes, n, "brane");
}
const entropy::StateSystem& Env::system(const std::string& n) const {
    return lookup(systems, n, "system");
}
const entropy::FuzzConfig& Env::fuzz_of(const std::string& n) const {
    return lookup(fuzz, n, "fuzz config");
}

namespace {

FiniteCommRing capped(FiniteCommRing r, const Caps& caps) {
    if (r.size() > caps.carrier_cap)
        throw CapError("ring '" + r.name() + "' has " + std::to_string(r.size()) +
                       " elements, beyond the carrier cap " +
                       std::to_string(caps.carrier_cap));
    return r;
}

}  // namespace

FiniteCommRing make_ring(const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    if (kind == "zmod")
        return capped(algebra::rings::zmod(need_int(j, "n")), env.caps);
    if (kind == "zero")
        return algebra::rings::zero_ring();
    if (kind == "trunc_poly")
        return algebra::rings::trunc_poly(env.ring(need_string(j, "base")),
                                          need_int(j, "power"),
                                          j.value("var", std::string("t")),
                                          env.caps.carrier_cap);
    if (kind == "dual_numbers")
        return capped(algebra::dual_numbers(env.ring(need_string(j, "base")), env.caps).total,
                      env.caps);
    if (kind == "product")
        return algebra::rings::product(env.ring(need_string(j, "left")),
                                       env.ring(need_string(j, "right")),
                                       env.caps.carrier_cap);
    if (kind == "power")
        return algebra::rings::power(env.ring(need_string(j, "base")), need_int(j, "k"),
                                     env.caps.carrier_cap);
    if (kind == "square_zero") {
        const auto& base = env.ring(need_string(j, "base"));
        return algebra::square_zero_extend(base, env.module(need_string(j, "module")),
                                           env.caps)
            .total;
    }
    if (kind == "tables") {
        std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
        auto add = j.at("add").get<std::vector<std::vector<int>>>();
        auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(names.size()) > env.caps.carrier_cap)
            throw CapError("ring tables exceed the carrier cap");
        return FiniteCommRing(j.value("name", std::string("ring")), std::move(names),
                              std::move(add), std::move(mul), need_int(j, "zero"),
                              need_int(j, "one"));
    }
    bad("unknown ring kind '" + kind + "'");
}

FiniteModule make_module(const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    const auto& ring = env.ring(need_string(j, "ring"));
    if (kind == "free")
        return algebra::modules::free_rank_one(ring);
    if (kind == "zero")
        return algebra::modules::zero_module(ring);
    if (kind == "cyclic")
        return algebra::modules::cyclic(ring, need_int(j, "d"));
    bad("unknown module kind '" + kind + "'");
}

SimplicialSet make_space(const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    const int dim = j.value("dim", env.caps.max_dim);
    namespace sp = simplicial::spaces;
    if (kind == "delta")
        return sp::delta(need_int(j, "n"), dim);
    if (kind == "boundary_delta")
        return sp::boundary_delta(need_int(j, "n"), dim);
    if (kind == "discrete")
        return sp::discrete(need_int(j, "points"), dim);
    if (kind == "empty")
        return sp::empty_space(dim);
    if (kind == "nerve_cyclic")
        return simplicial::nerve(cat::cyclic_group(need_int(j, "n")), dim).space;
    if (kind == "product")
        return simplicial::product(env.space(need_string(j, "left")),
                                   env.space(need_string(j, "right")));
    if (kind == "tables") {
        auto counts = j.at("counts").get<std::vector<int>>();
        auto faces = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
        auto degens = j.at("degeneracies").get<std::vector<std::vector<std::vector<int>>>>();
        for (int c : counts)
            if (c > env.caps.simplex_cap)
                throw CapError("space tables exceed the simplex cap");
        return SimplicialSet(static_cast<int>(counts.size()) - 1, std::move(counts),
                             std::move(faces), std::move(degens));
    }
    bad("unknown space kind '" + kind + "'");
}

FiniteSite make_site(const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    namespace ss = site::sites;
    if (kind == "subset_lattice")
        return ss::subset_lattice(need_int(j, "ground"),
                                  topology_by_name(need_string(j, "topology")));
    if (kind == "divisor_lattice")
        return ss::divisor_lattice(need_int(j, "n"),
                                   topology_by_name(need_string(j, "topology")));
    if (kind == "chain")
        return ss::chain_site(need_int(j, "length"),
                              topology_by_name(need_string(j, "topology")));
    if (kind == "finset")
        return ss::finset_site(need_int(j, "max_size"));
    if (kind == "flip_factorizations")
        return ss::with_flipped_factorizations(env.site_named(need_string(j, "of")));
    if (kind == "tables") {
        auto onames = j.at("objects").get<std::vector<std::string>>();
        std::vector<FiniteCategory::Mor> mors;
        for (const auto& m : j.at("morphisms"))
            mors.push_back({need_int(m, "src"), need_int(m, "tgt"), need_string(m, "name")});
        auto comp = j.at("composition").get<std::vector<std::vector<int>>>();
        auto ids = j.at("identities").get<std::vector<int>>();
        FiniteCategory c(j.value("name", std::string("site")), std::move(onames),
                         std::move(mors), std::move(comp), std::move(ids));
        std::map<std::pair<int, int>, site::PullbackData> pbs;
        if (j.contains("pullbacks"))
            for (const auto& p : j["pullbacks"])
                pbs[{need_int(p, "f"), need_int(p, "g")}] = {need_int(p, "apex"),
                                                             need_int(p, "p1"),
                                                             need_int(p, "p2")};
        std::map<std::pair<int, int>, site::CoproductData> cps;
        if (j.contains("coproducts"))
            for (const auto& p : j["coproducts"])
                cps[{need_int(p, "a"), need_int(p, "b")}] = {need_int(p, "obj"),
                                                             need_int(p, "inj1"),
                                                             need_int(p, "inj2")};
        auto covers = j.at("covers").get<std::vector<std::vector<site::CoverFamily>>>();
        std::vector<site::FactorizationData> fact;
        if (j.contains("factorizations")) {
            for (const auto& f : j["factorizations"])
                fact.push_back({need_int(f, "mid"), need_int(f, "left"), need_int(f, "right")});
        } else {
            for (int f = 0; f < c.num_morphisms(); ++f)
                fact.push_back({c.src(f), c.identity(c.src(f)), f});
        }
        return FiniteSite(std::move(c), std::move(pbs), std::move(cps), std::move(covers),
                          std::move(fact));
    }
    bad("unknown site kind '" + kind + "'");
}

EnergyFunctor make_energy(const std::string& name, const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    if (kind == "identity")
        return functors::identity_energy(env.site_named(need_string(j, "site")), name);
    if (kind == "identity_on_objects")
        return functors::identity_on_objects(name, env.site_named(need_string(j, "source")),
                                             env.site_named(need_string(j, "target")));
    if (kind == "poset_map")
        return functors::poset_energy(name, env.site_named(need_string(j, "source")),
                                      env.site_named(need_string(j, "target")),
                                      j.at("object_map").get<std::vector<int>>());
    if (kind == "constant") {
        const auto& s = env.site_named(need_string(j, "site"));
        const int obj = need_int(j, "object");
        std::vector<int> objs(s.cat().num_objects(), obj);
        std::vector<int> mors(s.cat().num_morphisms(), s.cat().identity(obj));
        return EnergyFunctor(name, s, s, std::move(objs), std::move(mors));
    }
    if (kind == "conjugation") {
        const auto& s = env.site_named(need_string(j, "site"));
        const auto& c = s.cat();
        std::vector<int> sigma(c.num_objects());
        for (int o = 0; o < c.num_objects(); ++o)
            sigma[o] = c.identity(o);
        for (const auto& nm : j.at("sigma")) {
            const std::string want = nm.get<std::string>();
            int found = -1;
            for (int m = 0; m < c.num_morphisms(); ++m)
                if (c.morphism_name(m) == want)
                    found = m;
            if (found < 0 || !c.is_iso(found) || c.src(found) != c.tgt(found))
                bad("conjugation: '" + want + "' is not an endo-isomorphism");
            sigma[c.src(found)] = found;
        }
        std::vector<int> obj_map(c.num_objects()), mor_map(c.num_morphisms());
        for (int o = 0; o < c.num_objects(); ++o)
            obj_map[o] = o;
        for (int m = 0; m < c.num_morphisms(); ++m)
            mor_map[m] = c.compose(sigma[c.tgt(m)], c.compose(m, *c.inverse(sigma[c.src(m)])));
        return EnergyFunctor(name, s, s, std::move(obj_map), std::move(mor_map));
    }
    if (kind == "tables")
        return EnergyFunctor(name, env.site_named(need_string(j, "source")),
                             env.site_named(need_string(j, "target")),
                             j.at("object_map").get<std::vector<int>>(),
                             j.at("morphism_map").get<std::vector<int>>());
    bad("unknown energy kind '" + kind + "'");
}

EvaluableFunctor make_functor(const json& j, const Env& env) {
    const std::string kind = need_string(j, "kind");
    if (kind == "representable")
        return EvaluableFunctor::representable(env.ring(need_string(j, "ring")));
    if (kind == "constant")
        return EvaluableFunctor::constant(env.space(need_string(j, "space")),
                                          need_string(j, "space"));
    if (kind == "constant_nerve")
        return EvaluableFunctor::constant_nerve(cat::cyclic_group(need_int(j, "group")),
                                                env.caps.max_dim);
    if (kind == "units_nerve")
        return EvaluableFunctor::units_nerve(env.caps.max_dim);
    bad("unknown functor kind '" + kind + "'");
}

entropy::FuzzConfig make_fuzz(const json& j) {
    entropy::FuzzConfig cfg;
    cfg.rule = j.value("rule", cfg.rule);
    cfg.panels = j.value("panels", cfg.panels);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    return cfg;
}

Env build_env(const json& scenario, const Caps& caps) {
    Env env;
    env.caps = caps;
    if (scenario.contains("caps")) {
        const auto& c = scenario["caps"];
        env.caps.max_dim = c.value("max_dim", env.caps.max_dim);
        env.caps.carrier_cap = c.value("carrier_cap", env.caps.carrier_cap);
        env.caps.ex_cap = c.value("ex_cap", env.caps.ex_cap);
        env.caps.simplex_cap = c.value("simplex_cap", env.caps.simplex_cap);
    }
    auto list = [&](const char* key) {
        return scenario.contains(key) ? scenario[key] : json::array();
    };
    for (const auto& j : list("rings"))
        env.rings.insert({need_string(j, "name"), make_ring(j, env)});
    for (const auto& j : list("modules"))
        env.modules.insert({need_string(j, "name"), make_module(j, env)});
    for (const auto& j : list("spaces"))
        env.spaces.insert({need_string(j, "name"), make_space(j, env)});
    for (const auto& j : list("sites"))
        env.sites.insert({need_string(j, "name"), make_site(j, env)});
    for (const auto& j : list("energies"))
        env.energies.insert({need_string(j, "name"),
                             make_energy(need_string(j, "name"), j, env)});
    for (const auto& j : list("functors"))
        env.functors.insert({need_string(j, "name"), make_functor(j, env)});
    for (const auto& j : list("branes"))
        env.branes.insert(
            {need_string(j, "name"),
             functors::compose_brane(env.functor(need_string(j, "observable")),
                                     env.energy(need_string(j, "energy")))});
    for (const auto& j : list("systems")) {
        entropy::StateSystem sys{j.at("energies").get<std::vector<double>>(),
                                 j.value("beta", 1.0)};
        env.systems.insert({need_string(j, "name"), std::move(sys)});
        env.fuzz.insert({need_string(j, "name"),
                         j.contains("fuzz") ? make_fuzz(j["fuzz"]) : entropy::FuzzConfig{}});
    }
    return env;
}

std::string schema_text() {
    return R"(branekit scenario schema (JSON)
================================

Top level object:
  name      string            scenario name, echoed in the report
  caps      object (optional) {max_dim, carrier_cap, ex_cap, simplex_cap}
  rings     array             named ring builders
  modules   array             named module builders (field "ring" names the base)
  spaces    array             named simplicial-set builders
  sites     array             named site builders
  energies  array             named site functors
  functors  array             named evaluable functors
  branes    array             {name, energy, observable}
  systems   array             {name, energies: [..], beta, fuzz: {rule, panels, tolerance}}
  checks    array             see `branekit list-checks`

Ring builders ("kind"):
  zmod{n} | zero | trunc_poly{base, power, var?} | dual_numbers{base}
  product{left, right} | power{base, k} | square_zero{base, module}
  tables{name?, elements, add, mul, zero, one}

Module builders ("kind", plus "ring"): free | zero | cyclic{d}

Space builders ("kind"):
  delta{n} | boundary_delta{n} | discrete{points} | empty | nerve_cyclic{n}
  product{left, right} | tables{counts, faces, degeneracies}
  optional "dim" overrides the global truncation

Site builders ("kind"):
  subset_lattice{ground, topology} | divisor_lattice{n, topology}
  chain{length, topology} | finset{max_size} | flip_factorizations{of}
  tables{name?, objects, morphisms[{src,tgt,name}], composition, identities,
         pullbacks[{f,g,apex,p1,p2}]?, coproducts[{a,b,obj,inj1,inj2}]?,
         covers (per object: list of morphism-id families), factorizations?}
  topology is one of: join | contains_id | dense_bottom | all_nonempty

Energy builders ("kind"):
  identity{site} | identity_on_objects{source, target}
  poset_map{source, target, object_map} | constant{site, object}
  conjugation{site, sigma: [morphism names]} |
  tables{source, target, object_map, morphism_map}

Functor builders ("kind"):
  representable{ring} | constant{space} | constant_nerve{group} | units_nerve

Check entries ("check", plus parameters):
  validate_rings            {}
  validate_modules          {}
  validate_spaces           {}
  topology_axioms           {site}
  energy_axioms             {energy, expect_fail?: [axiom names]}
  topology_transport        {energy}
  brane_coherence           {brane, rings: [names]}
  derivations               {functor, rows: [{ring, module, point, expect_pi0?}]}
  delta_sampler             {functor, rows: [{ring, module, point}]}
  tangent_retraction        {functor, rings: [names]}
  relative_derivations      {functor, ring, module, point, expect_pi0?}
  uncertainty               {brane, ring, module, point, expect?: holds|fails}
  descent                   {functor, rings: [names], cover: {from, to}}
  sharp_entropy             {system, expect_bits?, tolerance?}
  fuzzy_entropy             {system, expect_bits?, tolerance?}
  entropy_normalization     {system}

Exit status: 0 all checks pass, 1 a check failed, 2 input error, 3 resource cap.
)";
}

}  // namespace branekit::io
