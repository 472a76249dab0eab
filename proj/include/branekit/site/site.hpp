#pragma once

#include <map>

#include "branekit/category.hpp"

namespace branekit::site {

struct PullbackData {
    int apex, p1, p2;  // p1: apex -> src(f), p2: apex -> src(g) for cospan (f, g)
};

struct CoproductData {
    int obj, inj1, inj2;
};

struct FactorizationData {
    int mid, left, right;  // f = right o left through mid
};

/* Cover family: sorted list of morphism ids into a common object. */
using CoverFamily = std::vector<int>;

/* Finite category with declared pullbacks, binary coproducts, covering families,
 * and a functorial factorization table. Objects may carry ring labels so that
 * evaluable functors can be run over site objects. */
class FiniteSite {
public:
    FiniteSite(FiniteCategory cat, std::map<std::pair<int, int>, PullbackData> pullbacks,
               std::map<std::pair<int, int>, CoproductData> coproducts,
               std::vector<std::vector<CoverFamily>> covers,
               std::vector<FactorizationData> factorizations,
               std::vector<std::string> ring_labels = {});

    const FiniteCategory& cat() const { return cat_; }
    const std::string& name() const { return cat_.name(); }

    bool has_pullback(int f, int g) const { return pullbacks_.count({f, g}) > 0; }
    const PullbackData& pullback(int f, int g) const;
    bool has_coproduct(int a, int b) const { return coproducts_.count({a, b}) > 0; }
    const CoproductData& coproduct(int a, int b) const;
    const std::vector<CoverFamily>& covers(int obj) const { return covers_[obj]; }
    bool is_cover(int obj, CoverFamily family) const;  // family need not be sorted
    /* A singleton family of an isomorphism always covers. */
    bool covers_with_isos(int obj, const CoverFamily& family) const;
    const FactorizationData& factorization(int f) const { return fact_[f]; }

    const std::string& ring_label(int obj) const { return ring_labels_[obj]; }

    const std::map<std::pair<int, int>, PullbackData>& all_pullbacks() const {
        return pullbacks_;
    }
    const std::map<std::pair<int, int>, CoproductData>& all_coproducts() const {
        return coproducts_;
    }

    /* Category axioms, pullback/coproduct universal properties, factorization
     * composites, cover well-formedness -- all exhaustive. */
    ValidationReport validate() const;

private:
    FiniteCategory cat_;
    std::map<std::pair<int, int>, PullbackData> pullbacks_;
    std::map<std::pair<int, int>, CoproductData> coproducts_;
    std::vector<std::vector<CoverFamily>> covers_;
    std::vector<FactorizationData> fact_;
    std::vector<std::string> ring_labels_;
};

enum class PosetTopology {
    JoinCovers,     // a family covers when the join of its sources is the object
    ContainsId,     // a family covers when it contains the identity
    DenseAtBottom,  // a family covers when some member's source is the bottom element
    AllNonempty     // every nonempty family covers
};

namespace sites {

/* Poset site: pullbacks are meets (must exist for comparable cospans), binary
 * coproducts are joins where they exist, identity-style factorizations. */
FiniteSite from_poset(const FiniteCategory& poset_cat, PosetTopology topology);
FiniteSite subset_lattice(int ground_size, PosetTopology topology);
FiniteSite divisor_lattice(int n, PosetTopology topology);
FiniteSite chain_site(int length, PosetTopology topology);

/* Full subcategory of finite sets on sizes 0..max_size, iso-singleton covers;
 * pullbacks and coproducts declared where the carrier sizes stay within range. */
FiniteSite finset_site(int max_size);

/* Flip every factorization from (dom, id, f) to (cod, f, id). */
FiniteSite with_flipped_factorizations(const FiniteSite& s);
/* Replace the cover assignment wholesale (revalidated by callers). */
FiniteSite with_covers(const FiniteSite& s, std::vector<std::vector<CoverFamily>> covers);

}  // namespace sites

}  // namespace branekit::site
