#pragma once

#include <string>
#include <vector>

#include "branekit/algebra/ring.hpp"

namespace branekit::algebra {

/* Unital ring homomorphism as an element table. */
struct RingHom {
    FiniteCommRing source, target;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
    std::string describe() const;
};

bool is_ring_hom(const RingHom& h);
RingHom identity_hom(const FiniteCommRing& R);
RingHom compose(const RingHom& g, const RingHom& f);  // g after f
bool is_iso(const RingHom& h);
RingHom inverse(const RingHom& h);

/* All unital ring homomorphisms B -> C, by backtracking with closure propagation
 * (assigning one element forces the images of everything it generates).
 * Result is sorted lexicographically by image table, so indexing is stable. */
std::vector<RingHom> enumerate_homs(const FiniteCommRing& B, const FiniteCommRing& C,
                                    const Caps& caps = {});

}  // namespace branekit::algebra
