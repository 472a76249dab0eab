#include "branekit/deformation/deformation.hpp"

#include <algorithm>

#include "branekit/simplicial/cotensor.hpp"

namespace branekit::deformation {

using algebra::dual_numbers;
using algebra::square_zero_extend;
using simplicial::FiberBranch;

RingHom dual_hom(const RingHom& f, const algebra::DualNumbers& db,
                 const algebra::DualNumbers& dc) {
    const int nb = f.source.size(), nc = f.target.size();
    std::vector<int> m(db.total.size());
    for (int b0 = 0; b0 < nb; ++b0)
        for (int b1 = 0; b1 < nb; ++b1)
            m[b0 * nb + b1] = f.map[b0] * nc + f.map[b1];
    return {db.total, dc.total, std::move(m)};
}

namespace {

/* Locate the point of a fiber corresponding to a vertex of the total space that
 * maps to the basepoint on the nose. */
int locate_in_fiber(const FiberResult& fib, int total_vertex, int base_vertex) {
    switch (fib.branch) {
        case FiberBranch::Discrete: {
            for (size_t i = 0; i < fib.vertex_source.size(); ++i)
                if (fib.vertex_source[i] == total_vertex)
                    return static_cast<int>(i);
            return -1;
        }
        case FiberBranch::CommaNerve: {
            const auto& cd = *fib.comma;
            (void)base_vertex;
            for (size_t i = 0; i < cd.objects.size(); ++i)
                if (cd.objects[i].first == total_vertex &&
                    cd.objects[i].second == cd.base_identity)
                    return static_cast<int>(i);
            return -1;
        }
        case FiberBranch::PathSpace: {
            const auto& pd = *fib.path;
            for (size_t i = 0; i < pd.pairs[0].size(); ++i) {
                auto [x, p] = pd.pairs[0][i];
                if (x != total_vertex)
                    continue;
                // p must be the constant path at the basepoint
                bool constant = true;
                const auto& table = pd.paths.elements[0][p];
                for (int m = 0; m < static_cast<int>(table.size()) && constant; ++m)
                    for (int z : table[m])
                        if (z != simplicial::degenerate_vertex(pd.ytilde, base_vertex, m)) {
                            constant = false;
                            break;
                        }
                if (constant)
                    return static_cast<int>(i);
            }
            return -1;
        }
    }
    return -1;
}

}  // namespace

DerivationSpace derivations(const EvaluableFunctor& F, const FiniteCommRing& A, int x,
                            const FiniteModule& M, const Caps& caps) {
    auto ext = square_zero_extend(A, M, caps);
    auto proj_map = F.evaluate_hom(ext.projection, caps);
    if (x < 0 || x >= proj_map.target.count(0))
        throw InputError("derivations: basepoint is not a vertex of F(A)");
    auto fib = simplicial::homotopy_fiber(proj_map, x, caps);
    auto split_map = F.evaluate_hom(ext.splitting, caps);
    const int zero_total = split_map.levels[0][x];
    const int zero = locate_in_fiber(fib, zero_total, x);
    return {{F, A, x}, M, std::move(fib), zero};
}

TangentEvaluation tangent(const EvaluableFunctor& F, const FiniteCommRing& A,
                          const Caps& caps) {
    auto dn = dual_numbers(A, caps);
    auto section = F.evaluate_hom(dn.unit, caps);
    auto projection = F.evaluate_hom(dn.augmentation, caps);
    auto space = F.evaluate(dn.total, caps);
    // retraction must hold on the nose
    auto r = simplicial::compose(projection, section);
    auto idm = simplicial::identity_map(section.source);
    if (r.levels != idm.levels)
        throw InputError("tangent: projection o section is not the identity");
    return {F, A, std::move(space), std::move(section), std::move(projection)};
}

DerivationSpace relative_derivations(const EvaluableFunctor& F, const FiniteCommRing& A, int y,
                                     const FiniteModule& M, const Caps& caps) {
    auto ext = square_zero_extend(A, M, caps);
    auto dn_base = dual_numbers(A, caps);
    auto dn_total = dual_numbers(ext.total, caps);

    // commuting square: F(proj): F(A+M) -> F(A) over F(proj[e]): F((A+M)[e]) -> F(A[e])
    RingHom proj_eps = dual_hom(ext.projection, dn_total, dn_base);
    {
        auto lhs = algebra::compose(dn_base.unit, ext.projection);
        auto rhs = algebra::compose(proj_eps, dn_total.unit);
        if (lhs.map != rhs.map)
            throw InputError("relative_derivations: unit square does not commute");
    }
    auto der = derivations(F, A, y, M, caps);

    auto proj_eps_map = F.evaluate_hom(proj_eps, caps);
    auto section_base = F.evaluate_hom(dn_base.unit, caps);
    const int sigma_y = section_base.levels[0][y];
    auto der_t = simplicial::homotopy_fiber(proj_eps_map, sigma_y, caps);

    auto top = F.evaluate_hom(dn_total.unit, caps);  // F(A+M) -> F((A+M)[e])
    auto dsigma = simplicial::induced_fiber_map(der.fiber, der_t, top, section_base, caps);

    // zero derivation of the tangent side
    auto zero_total_hom = algebra::compose(dn_total.unit, ext.splitting);
    auto zero_map = F.evaluate_hom(zero_total_hom, caps);
    const int zero_t = locate_in_fiber(der_t, zero_map.levels[0][y], sigma_y);
    if (zero_t < 0)
        throw InputError("relative_derivations: zero derivation not found in Der_TF");

    auto fib = simplicial::homotopy_fiber(dsigma, zero_t, caps);
    const int zero_rel = locate_in_fiber(fib, der.zero_vertex, zero_t);
    return {{F, A, y}, M, std::move(fib), zero_rel};
}

UncertaintyVerdict uncertainty_product(const DerivationSpace& v_side,
                                       const DerivationSpace& e_side) {
    UncertaintyVerdict out;
    out.v_side = v_side.verdict();
    out.e_side = e_side.verdict();
    using simplicial::Status;
    if (out.v_side.status == Status::NonContractible) {
        out.product = {Status::NonContractible, "V-side: " + out.v_side.witness};
        out.provenance = "V-side factor";
    } else if (out.e_side.status == Status::NonContractible) {
        out.product = {Status::NonContractible, "E-side: " + out.e_side.witness};
        out.provenance = "E-side factor";
    } else if (out.v_side.status == Status::Contractible &&
               out.e_side.status == Status::Contractible) {
        out.product = {Status::Contractible, "both factors contractible"};
        out.provenance = "both factors";
    } else {
        out.product = {Status::Inconclusive, "an inconclusive factor blocks the verdict"};
        out.provenance = out.v_side.status == Status::Inconclusive ? "V-side factor"
                                                                   : "E-side factor";
    }
    out.uncertainty = out.product.status == Status::NonContractible
                          ? UncertaintyStatus::Holds
                          : (out.product.status == Status::Contractible
                                 ? UncertaintyStatus::Fails
                                 : UncertaintyStatus::Inconclusive);
    return out;
}

std::vector<SamplerRow> delta_sampler(const EvaluableFunctor& F,
                                      const std::vector<SamplerEntry>& universe,
                                      const Caps& caps) {
    std::vector<SamplerRow> rows;
    rows.reserve(universe.size());
    for (const auto& e : universe) {
        auto d = derivations(F, e.A, e.point, e.M, caps);
        auto v = d.verdict();
        rows.push_back({e.ring, e.module, e.point, to_string(d.fiber.branch), d.components(),
                        to_string(v.status), v.witness});
    }
    return rows;
}

}  // namespace branekit::deformation
