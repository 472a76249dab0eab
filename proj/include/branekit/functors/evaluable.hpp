#pragma once

#include <memory>

#include "branekit/algebra/extension.hpp"
#include "branekit/simplicial/nerve.hpp"

namespace branekit::functors {

using algebra::FiniteCommRing;
using algebra::RingHom;

/* Algebra-side action of an energy functor on the ring universe: identity, or a
 * relabeling between table-identical ring copies. */
struct AlgebraAction {
    enum class Kind { Identity, Relabel };
    Kind kind = Kind::Identity;
    std::vector<std::pair<FiniteCommRing, FiniteCommRing>> relabel;

    FiniteCommRing apply(const FiniteCommRing& A) const;
    RingHom apply(const RingHom& f) const;
};

/* Unit elements of a finite commutative ring, ascending. */
std::vector<int> unit_elements(const FiniteCommRing& A);
/* One-object groupoid of units; morphisms are the unit elements in ascending order. */
FiniteCategory units_category(const FiniteCommRing& A);

/* Functor from finite commutative rings to truncated simplicial sets, covariant
 * along ring homomorphisms. */
class EvaluableFunctor {
public:
    enum class Kind { Representable, Constant, UnitsNerve, Composite };

    static EvaluableFunctor representable(FiniteCommRing B);
    static EvaluableFunctor constant(simplicial::SimplicialSet S, std::string label);
    /* Constant at the nerve of a category; maps carry functor provenance. */
    static EvaluableFunctor constant_nerve(const FiniteCategory& C, int dim);
    static EvaluableFunctor units_nerve(int dim);
    static EvaluableFunctor composite(EvaluableFunctor V, AlgebraAction action,
                                      std::string energy_name);

    Kind kind() const { return kind_; }
    const std::string& describe() const { return label_; }

    simplicial::SimplicialSet evaluate(const FiniteCommRing& A, const Caps& caps = {}) const;
    simplicial::SimplicialMap evaluate_hom(const RingHom& f, const Caps& caps = {}) const;
    /* Human-readable vertex names of evaluate(A), for report witnesses. */
    std::vector<std::string> vertex_labels(const FiniteCommRing& A, const Caps& caps = {}) const;

private:
    Kind kind_;
    std::string label_;
    std::shared_ptr<const FiniteCommRing> source_ring_;        // Representable
    std::shared_ptr<const simplicial::SimplicialSet> value_;   // Constant
    std::shared_ptr<const simplicial::Nerve> value_nerve_;     // Constant over a nerve
    int dim_ = 4;                                              // UnitsNerve truncation
    std::shared_ptr<const EvaluableFunctor> inner_;            // Composite
    std::shared_ptr<const AlgebraAction> action_;              // Composite
};

/* Exhaustive functoriality scan over a finite ring universe: identities map to
 * identities and composites of enumerated homs are preserved. */
ValidationReport check_functoriality(const EvaluableFunctor& F,
                                     const std::vector<FiniteCommRing>& universe,
                                     const Caps& caps = {});

}  // namespace branekit::functors
