#pragma once

#include <string>
#include <vector>

#include "branekit/common.hpp"

namespace branekit::algebra {

/* Finite commutative unital ring with explicit operation tables.
 * Elements are ids 0..size()-1; tables are total. Immutable after construction. */
class FiniteCommRing {
public:
    FiniteCommRing(std::string name, std::vector<std::string> elem_names,
                   std::vector<std::vector<int>> add_table,
                   std::vector<std::vector<int>> mul_table, int zero, int one);

    int size() const { return static_cast<int>(add_.size()); }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    bool is_zero_ring() const { return zero_ == one_; }

    const std::string& name() const { return name_; }
    const std::string& elem_name(int a) const { return elem_names_[a]; }

    /* Structural equality of carriers and tables (names ignored). */
    bool same_tables(const FiniteCommRing& o) const;

private:
    std::string name_;
    std::vector<std::string> elem_names_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
    int zero_, one_;
};

/* Exhaustive scan of all ring axioms; every failure carries a witness tuple. */
ValidationReport validate_ring(const FiniteCommRing& R);

namespace rings {

FiniteCommRing zero_ring();
FiniteCommRing zmod(int n);
/* base[x]/(x^k), carrier = coefficient tuples (a_0,...,a_{k-1}). */
FiniteCommRing trunc_poly(const FiniteCommRing& base, int k, const std::string& var = "t",
                          int carrier_cap = Caps{}.carrier_cap);
FiniteCommRing product(const FiniteCommRing& a, const FiniteCommRing& b,
                       int carrier_cap = Caps{}.carrier_cap);
/* k-fold product a x a x ... x a. */
FiniteCommRing power(const FiniteCommRing& a, int k, int carrier_cap = Caps{}.carrier_cap);

}  // namespace rings

}  // namespace branekit::algebra
