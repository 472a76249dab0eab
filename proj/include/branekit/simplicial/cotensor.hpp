#pragma once

#include "branekit/simplicial/simplicial_map.hpp"

namespace branekit::simplicial {

/* Full level tables of a simplicial map K -> X (target ids per K-simplex). */
using MapTable = std::vector<std::vector<int>>;

/* The action X(alpha): X_n -> X_m of a monotone operator alpha: [m] -> [n],
 * computed through the epi-mono factorization. */
int act(const SimplicialSet& X, const std::vector<int>& alpha, int n, int x);

/* Every simplicial map K -> X within the truncation, enumerated by backtracking
 * over nondegenerate simplices of K in (level, id) order; lexicographic output. */
std::vector<MapTable> enumerate_maps(const SimplicialSet& K, const SimplicialSet& X,
                                     const Caps& caps = {});

/* Exponential X^K: level n is the set of maps K x Delta^n -> X. determined[n]
 * is false when the truncation cannot pin that level down (it can when
 * top_nondeg(K) + n <= dim, or when X is discrete). */
struct CotensorResult {
    SimplicialSet space;
    std::vector<bool> determined;
    std::vector<std::vector<MapTable>> elements;  // elements[n] lists the maps at level n
};

CotensorResult cotensor(const SimplicialSet& X, const SimplicialSet& K, const Caps& caps = {});

/* Evaluation (X^{Delta^1})_n -> X_n at endpoint j of Delta^1. */
SimplicialMap path_endpoint(const CotensorResult& paths, const SimplicialSet& X, int j,
                            const Caps& caps = {});

/* Post-composition g_* : X^K -> Y^K for g: X -> Y, against precomputed cotensors. */
SimplicialMap cotensor_postcompose(const CotensorResult& xk, const CotensorResult& yk,
                                   const SimplicialMap& g);

/* Existence of a levelwise-bijective simplicial map A -> B. */
bool isomorphic(const SimplicialSet& A, const SimplicialSet& B, const Caps& caps = {});

}  // namespace branekit::simplicial
