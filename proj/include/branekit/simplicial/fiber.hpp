#pragma once

#include "branekit/simplicial/ex.hpp"
#include "branekit/simplicial/verdict.hpp"

namespace branekit::simplicial {

enum class FiberBranch { Discrete, CommaNerve, PathSpace };

inline const char* to_string(FiberBranch b) {
    switch (b) {
        case FiberBranch::Discrete: return "discrete";
        case FiberBranch::CommaNerve: return "comma-nerve";
        case FiberBranch::PathSpace: return "path-space";
    }
    return "?";
}

struct FiberResult {
    SimplicialSet space;
    FiberBranch branch;
    int ex_used = 0;
    int reliable_dim;  // levels 0..reliable_dim of the space are exact

    // Discrete: which source vertex each fiber point came from.
    std::vector<int> vertex_source;
    // CommaNerve: the comma category, its nerve, and the (object, morphism) pairs.
    struct CommaData {
        Nerve nv;
        std::vector<std::pair<int, int>> objects;
        std::vector<int> carriers;
        int base_identity;  // identity morphism of the basepoint in the target category
    };
    std::optional<CommaData> comma;
    // PathSpace: the replaced target, its path cotensor and the member pairs.
    struct PathData {
        SimplicialSet ytilde;
        CotensorResult paths;
        std::vector<std::vector<std::pair<int, int>>> pairs;  // per level (x, p)
    };
    std::optional<PathData> path;

    HomotopyVerdict verdict() const { return contractibility(space, reliable_dim); }
};

/* Precomputed path-space machinery of one target: its Ex^k replacement together
 * with the path cotensor and both endpoint evaluations. Reusable across every
 * map into that target. */
struct PathContext {
    SimplicialSet target;
    ExResult exy;
    CotensorResult paths;
    SimplicialMap ev0, ev1;
    int ex_used;
};

PathContext make_path_context(const SimplicialSet& Y, const Caps& caps = {});

/* hofiber(f, basepoint): literal fiber when both ends are discrete; nerve of the
 * comma category (F down-to basepoint) when f is the nerve of a functor; otherwise
 * the mapping path space over Ex^k of the target, k recorded. */
FiberResult homotopy_fiber(const SimplicialMap& f, int basepoint, const Caps& caps = {},
                           std::optional<FiberBranch> force = std::nullopt,
                           const PathContext* context = nullptr);

/* Functorial fiber: given a strictly commuting square  f: X->Y, f': X'->Y',
 * top: X->X', bot: Y->Y' with bot(base) = base', and fibers A, B of f, f'
 * computed with the same branch, the induced map A.space -> B.space. */
SimplicialMap induced_fiber_map(const FiberResult& A, const FiberResult& B,
                                const SimplicialMap& top, const SimplicialMap& bot,
                                const Caps& caps = {});

}  // namespace branekit::simplicial
