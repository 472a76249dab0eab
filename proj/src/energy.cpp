#include "branekit/functors/energy.hpp"

namespace branekit::functors {

EnergyFunctor::EnergyFunctor(std::string nm, FiniteSite src, FiniteSite tgt,
                             std::vector<int> objs, std::vector<int> mors, AlgebraAction act)
    : name(std::move(nm)),
      source(std::move(src)),
      target(std::move(tgt)),
      obj_map(std::move(objs)),
      mor_map(std::move(mors)),
      action(std::move(act)) {
    // functor laws checked by CatFunctor's constructor
    CatFunctor probe(source.cat(), target.cat(), obj_map, mor_map);
}

SimplicialObject EnergyFunctor::map_object(const SimplicialObject& X) const {
    SimplicialObject Y;
    Y.dim = X.dim;
    Y.objects.resize(X.dim + 1);
    for (int n = 0; n <= X.dim; ++n)
        Y.objects[n] = obj_map[X.objects[n]];
    Y.faces.resize(X.dim + 1);
    Y.degens.resize(std::max(X.dim, 0));
    for (int n = 1; n <= X.dim; ++n) {
        Y.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            Y.faces[n][i] = mor_map[X.faces[n][i]];
    }
    for (int n = 0; n < X.dim; ++n) {
        Y.degens[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            Y.degens[n][i] = mor_map[X.degens[n][i]];
    }
    return Y;
}

AugmentedSimplicialObject EnergyFunctor::map_object(const AugmentedSimplicialObject& X) const {
    return {map_object(X.levels), obj_map[X.base], mor_map[X.augmentation]};
}

EnergyFunctor identity_energy(const FiniteSite& S, std::string name) {
    std::vector<int> objs(S.cat().num_objects()), mors(S.cat().num_morphisms());
    for (int o = 0; o < S.cat().num_objects(); ++o)
        objs[o] = o;
    for (int m = 0; m < S.cat().num_morphisms(); ++m)
        mors[m] = m;
    return EnergyFunctor(std::move(name), S, S, std::move(objs), std::move(mors));
}

EnergyFunctor identity_on_objects(std::string name, const FiniteSite& src,
                                  const FiniteSite& tgt) {
    if (src.cat().num_objects() != tgt.cat().num_objects() ||
        src.cat().num_morphisms() != tgt.cat().num_morphisms())
        throw InputError("identity_on_objects: underlying categories differ in size");
    std::vector<int> objs(src.cat().num_objects()), mors(src.cat().num_morphisms());
    for (int o = 0; o < src.cat().num_objects(); ++o)
        objs[o] = o;
    for (int m = 0; m < src.cat().num_morphisms(); ++m)
        mors[m] = m;
    return EnergyFunctor(std::move(name), src, tgt, std::move(objs), std::move(mors));
}

EnergyFunctor poset_energy(std::string name, const FiniteSite& src, const FiniteSite& tgt,
                           const std::vector<int>& obj_map) {
    const auto& cs = src.cat();
    const auto& ct = tgt.cat();
    std::vector<int> mor_map(cs.num_morphisms());
    for (int m = 0; m < cs.num_morphisms(); ++m) {
        auto hs = ct.homs(obj_map[cs.src(m)], obj_map[cs.tgt(m)]);
        if (hs.size() != 1)
            throw InputError("poset_energy: object map is not monotone at " +
                             cs.morphism_name(m));
        mor_map[m] = hs[0];
    }
    return EnergyFunctor(std::move(name), src, tgt, obj_map, std::move(mor_map));
}

Brane compose_brane(const EvaluableFunctor& V, const EnergyFunctor& E) {
    return {E, V, EvaluableFunctor::composite(V, E.action, E.name)};
}

}  // namespace branekit::functors
