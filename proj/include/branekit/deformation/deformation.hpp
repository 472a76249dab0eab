#pragma once

#include "branekit/functors/energy.hpp"
#include "branekit/simplicial/fiber.hpp"

namespace branekit::deformation {

using algebra::FiniteCommRing;
using algebra::FiniteModule;
using algebra::RingHom;
using functors::EvaluableFunctor;
using simplicial::FiberResult;
using simplicial::HomotopyVerdict;

/* f[e]: B[e] -> C[e] induced coefficientwise by f: B -> C. */
RingHom dual_hom(const RingHom& f, const algebra::DualNumbers& db,
                 const algebra::DualNumbers& dc);

struct PointedEvaluation {
    EvaluableFunctor functor;
    FiniteCommRing ring;
    int point;
};

/* hofiber(F(A+M) -> F(A)) at the point, with the zero derivation marked. */
struct DerivationSpace {
    PointedEvaluation base;
    FiniteModule module;
    FiberResult fiber;
    int zero_vertex;  // the splitting-induced point, -1 if not located

    int components() const { return simplicial::pi0(fiber.space); }
    HomotopyVerdict verdict() const { return fiber.verdict(); }
};

DerivationSpace derivations(const EvaluableFunctor& F, const FiniteCommRing& A, int x,
                            const FiniteModule& M, const Caps& caps = {});

/* TF(A) = F(A[e]) with the unit-induced section and the augmentation projection;
 * projection o section = id exactly. */
struct TangentEvaluation {
    EvaluableFunctor functor;
    FiniteCommRing ring;
    simplicial::SimplicialSet space;
    simplicial::SimplicialMap section;     // F(A) -> F(A[e])
    simplicial::SimplicialMap projection;  // F(A[e]) -> F(A)
};

TangentEvaluation tangent(const EvaluableFunctor& F, const FiniteCommRing& A,
                          const Caps& caps = {});

/* hofiber of d(sigma): Der_F(A,M) -> Der_TF(A,M) at the zero derivation of TF. */
DerivationSpace relative_derivations(const EvaluableFunctor& F, const FiniteCommRing& A, int y,
                                     const FiniteModule& M, const Caps& caps = {});

enum class UncertaintyStatus { Holds, Fails, Inconclusive };

inline const char* to_string(UncertaintyStatus s) {
    switch (s) {
        case UncertaintyStatus::Holds: return "holds";
        case UncertaintyStatus::Fails: return "fails";
        case UncertaintyStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct UncertaintyVerdict {
    HomotopyVerdict v_side;
    HomotopyVerdict e_side;
    HomotopyVerdict product;
    UncertaintyStatus uncertainty;  // holds iff the product is non-contractible
    std::string provenance;
};

/* Product-contractibility law on the two factors; v_side is expected to come
 * from relative_derivations, e_side from derivations of an energy observable. */
UncertaintyVerdict uncertainty_product(const DerivationSpace& v_side,
                                       const DerivationSpace& e_side);

struct SamplerEntry {
    std::string ring, module;
    int point;
    FiniteCommRing A;
    FiniteModule M;
};

struct SamplerRow {
    std::string ring, module;
    int point;
    std::string branch;
    int pi0;
    std::string verdict;
    std::string witness;
};

/* Derivation summaries over a finite universe of (A, x, M), in input order. */
std::vector<SamplerRow> delta_sampler(const EvaluableFunctor& F,
                                      const std::vector<SamplerEntry>& universe,
                                      const Caps& caps = {});

}  // namespace branekit::deformation
