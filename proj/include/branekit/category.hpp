#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branekit/common.hpp"

namespace branekit {

/* Finite category with explicit composition table.
 * Objects are ids 0..num_objects()-1, morphisms 0..num_morphisms()-1. */
class FiniteCategory {
public:
    struct Mor {
        int src, tgt;
        std::string name;
    };

    FiniteCategory(std::string name, std::vector<std::string> object_names,
                   std::vector<Mor> morphisms, std::vector<std::vector<int>> comp,
                   std::vector<int> identities);

    int num_objects() const { return static_cast<int>(object_names_.size()); }
    int num_morphisms() const { return static_cast<int>(mors_.size()); }
    int src(int m) const { return mors_[m].src; }
    int tgt(int m) const { return mors_[m].tgt; }
    /* g after f; requires tgt(f) == src(g). */
    int compose(int g, int f) const { return comp_[g][f]; }
    bool composable(int g, int f) const { return tgt(f) == src(g); }
    int identity(int obj) const { return ids_[obj]; }
    bool is_identity(int m) const { return ids_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }

    const std::string& name() const { return name_; }
    const std::string& object_name(int o) const { return object_names_[o]; }
    const std::string& morphism_name(int m) const { return mors_[m].name; }

    std::vector<int> homs(int a, int b) const;
    bool is_iso(int m) const;
    std::optional<int> inverse(int m) const;
    bool has_initial() const;
    bool has_terminal() const;

    /* Identity and associativity laws, exhaustively. */
    ValidationReport validate() const;

private:
    std::string name_;
    std::vector<std::string> object_names_;
    std::vector<Mor> mors_;
    std::vector<std::vector<int>> comp_;  // comp_[g][f], -1 when not composable
    std::vector<int> ids_;
};

namespace cat {

/* The linear order 0 <= 1 <= ... <= n. */
FiniteCategory chain(int n);
FiniteCategory terminal();
/* One-object groupoid of Z/n under addition. */
FiniteCategory cyclic_group(int n);
/* Poset category from a reflexive-transitive leq relation. */
FiniteCategory poset(std::string name, std::vector<std::string> object_names,
                     const std::vector<std::vector<bool>>& leq);
FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace cat

/* Functor data between finite categories, validated on construction. */
struct CatFunctor {
    FiniteCategory source, target;
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    CatFunctor(FiniteCategory src, FiniteCategory tgt, std::vector<int> objs,
               std::vector<int> mors);
};

/* Comma category (F down-to y): objects are pairs (c, g: F c -> y); every
 * morphism carries its underlying morphism of the source category. */
struct CommaCategory {
    FiniteCategory cat;
    std::vector<std::pair<int, int>> objects;  // (source object, morphism F c -> y)
    std::vector<int> carriers;                 // underlying source morphism per comma morphism
};
CommaCategory comma_over(const CatFunctor& F, int y);

}  // namespace branekit
