#include "branekit/functors/evaluable.hpp"

#include <algorithm>

#include "branekit/algebra/homs.hpp"

namespace branekit::functors {

using algebra::enumerate_homs;
namespace sp = simplicial::spaces;

FiniteCommRing AlgebraAction::apply(const FiniteCommRing& A) const {
    if (kind == Kind::Identity)
        return A;
    for (const auto& [from, to] : relabel)
        if (from.same_tables(A) && from.name() == A.name())
            return to;
    return A;  // rings outside the relabeling stay put
}

RingHom AlgebraAction::apply(const RingHom& f) const {
    if (kind == Kind::Identity)
        return f;
    return {apply(f.source), apply(f.target), f.map};
}

std::vector<int> unit_elements(const FiniteCommRing& A) {
    std::vector<int> units;
    for (int u = 0; u < A.size(); ++u)
        for (int v = 0; v < A.size(); ++v)
            if (A.mul(u, v) == A.one()) {
                units.push_back(u);
                break;
            }
    return units;  // already ascending
}

FiniteCategory units_category(const FiniteCommRing& A) {
    std::vector<int> units = unit_elements(A);
    const int n = static_cast<int>(units.size());
    std::vector<int> pos(A.size(), -1);
    for (int i = 0; i < n; ++i)
        pos[units[i]] = i;
    std::vector<FiniteCategory::Mor> mors(n);
    for (int i = 0; i < n; ++i)
        mors[i] = {0, 0, A.elem_name(units[i])};
    std::vector<std::vector<int>> comp(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f)
            comp[g][f] = pos[A.mul(units[g], units[f])];
    return FiniteCategory("U(" + A.name() + ")", {"*"}, std::move(mors), std::move(comp),
                          {pos[A.one()]});
}

EvaluableFunctor EvaluableFunctor::representable(FiniteCommRing B) {
    EvaluableFunctor F;
    F.kind_ = Kind::Representable;
    F.label_ = "Spec(" + B.name() + ")";
    F.source_ring_ = std::make_shared<FiniteCommRing>(std::move(B));
    return F;
}

EvaluableFunctor EvaluableFunctor::constant(simplicial::SimplicialSet S, std::string label) {
    EvaluableFunctor F;
    F.kind_ = Kind::Constant;
    F.label_ = "Const(" + label + ")";
    F.value_ = std::make_shared<simplicial::SimplicialSet>(std::move(S));
    return F;
}

EvaluableFunctor EvaluableFunctor::constant_nerve(const FiniteCategory& C, int dim) {
    EvaluableFunctor F;
    F.kind_ = Kind::Constant;
    F.label_ = "Const(N(" + C.name() + "))";
    auto nv = std::make_shared<simplicial::Nerve>(simplicial::nerve(C, dim));
    F.value_ = std::make_shared<simplicial::SimplicialSet>(nv->space);
    F.value_nerve_ = nv;
    return F;
}

EvaluableFunctor EvaluableFunctor::units_nerve(int dim) {
    EvaluableFunctor F;
    F.kind_ = Kind::UnitsNerve;
    F.label_ = "N(units)";
    F.dim_ = dim;
    return F;
}

EvaluableFunctor EvaluableFunctor::composite(EvaluableFunctor V, AlgebraAction action,
                                             std::string energy_name) {
    EvaluableFunctor F;
    F.kind_ = Kind::Composite;
    F.label_ = V.label_ + " o " + energy_name;
    F.inner_ = std::make_shared<EvaluableFunctor>(std::move(V));
    F.action_ = std::make_shared<AlgebraAction>(std::move(action));
    return F;
}

simplicial::SimplicialSet EvaluableFunctor::evaluate(const FiniteCommRing& A,
                                                     const Caps& caps) const {
    switch (kind_) {
        case Kind::Representable:
            return sp::discrete(static_cast<int>(enumerate_homs(*source_ring_, A, caps).size()),
                                caps.max_dim);
        case Kind::Constant:
            return *value_;
        case Kind::UnitsNerve:
            return simplicial::nerve(units_category(A), dim_).space;
        case Kind::Composite:
            return inner_->evaluate(action_->apply(A), caps);
    }
    throw InputError("evaluate: unknown functor kind");
}

simplicial::SimplicialMap EvaluableFunctor::evaluate_hom(const RingHom& f,
                                                         const Caps& caps) const {
    switch (kind_) {
        case Kind::Representable: {
            auto src = enumerate_homs(*source_ring_, f.source, caps);
            auto tgt = enumerate_homs(*source_ring_, f.target, caps);
            auto S = sp::discrete(static_cast<int>(src.size()), caps.max_dim);
            auto T = sp::discrete(static_cast<int>(tgt.size()), caps.max_dim);
            std::vector<int> v(src.size());
            for (size_t i = 0; i < src.size(); ++i) {
                auto composed = algebra::compose(f, src[i]);
                int found = -1;
                for (size_t j = 0; j < tgt.size(); ++j)
                    if (tgt[j].map == composed.map)
                        found = static_cast<int>(j);
                if (found < 0)
                    throw InputError("evaluate_hom: composite hom not found");
                v[i] = found;
            }
            std::vector<std::vector<int>> lv(caps.max_dim + 1, v);
            return {std::move(S), std::move(T), std::move(lv), std::nullopt};
        }
        case Kind::Constant: {
            auto id = simplicial::identity_map(*value_);
            if (value_nerve_) {
                const auto& C = value_nerve_->category;
                std::vector<int> om(C.num_objects()), mm(C.num_morphisms());
                for (int o = 0; o < C.num_objects(); ++o)
                    om[o] = o;
                for (int m = 0; m < C.num_morphisms(); ++m)
                    mm[m] = m;
                id.nerve_data = simplicial::NerveFunctorData{C, C, std::move(om), std::move(mm)};
            }
            return id;
        }
        case Kind::UnitsNerve: {
            auto us = unit_elements(f.source);
            auto ut = unit_elements(f.target);
            auto cs = units_category(f.source);
            auto ct = units_category(f.target);
            auto ns = simplicial::nerve(cs, dim_);
            auto nt = simplicial::nerve(ct, dim_);
            std::vector<int> pos(f.target.size(), -1);
            for (size_t i = 0; i < ut.size(); ++i)
                pos[ut[i]] = static_cast<int>(i);
            std::vector<int> mm(us.size());
            for (size_t u = 0; u < us.size(); ++u) {
                const int img = pos[f.map[us[u]]];
                if (img < 0)
                    throw InputError("evaluate_hom: image of a unit is not a unit");
                mm[u] = img;
            }
            CatFunctor F(cs, ct, {0}, std::move(mm));
            return simplicial::nerve_map(ns, nt, F);
        }
        case Kind::Composite:
            return inner_->evaluate_hom(action_->apply(f), caps);
    }
    throw InputError("evaluate_hom: unknown functor kind");
}

std::vector<std::string> EvaluableFunctor::vertex_labels(const FiniteCommRing& A,
                                                         const Caps& caps) const {
    switch (kind_) {
        case Kind::Representable: {
            auto hs = enumerate_homs(*source_ring_, A, caps);
            std::vector<std::string> out(hs.size());
            for (size_t i = 0; i < hs.size(); ++i)
                out[i] = hs[i].describe();
            return out;
        }
        case Kind::Constant: {
            std::vector<std::string> out(value_->count(0));
            for (int v = 0; v < value_->count(0); ++v)
                out[v] = "v" + std::to_string(v);
            return out;
        }
        case Kind::UnitsNerve:
            return {"*"};
        case Kind::Composite:
            return inner_->vertex_labels(action_->apply(A), caps);
    }
    return {};
}

ValidationReport check_functoriality(const EvaluableFunctor& F,
                                     const std::vector<FiniteCommRing>& universe,
                                     const Caps& caps) {
    ValidationReport rep;
    for (const auto& A : universe) {
        auto idm = F.evaluate_hom(algebra::identity_hom(A), caps);
        auto expect = simplicial::identity_map(F.evaluate(A, caps));
        if (idm.levels != expect.levels)
            rep.fail("identity preserved", A.name());
    }
    for (const auto& A : universe)
        for (const auto& B : universe)
            for (const auto& C : universe) {
                auto fs = enumerate_homs(A, B, caps);
                auto gs = enumerate_homs(B, C, caps);
                for (const auto& f : fs)
                    for (const auto& g : gs) {
                        auto lhs = F.evaluate_hom(algebra::compose(g, f), caps);
                        auto rhs = simplicial::compose(F.evaluate_hom(g, caps),
                                                       F.evaluate_hom(f, caps));
                        if (lhs.levels != rhs.levels) {
                            rep.fail("composition preserved",
                                     A.name() + "->" + B.name() + "->" + C.name());
                            return rep;
                        }
                    }
            }
    return rep;
}

}  // namespace branekit::functors
