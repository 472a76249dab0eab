#pragma once

#include <string>
#include <vector>

#include "branekit/algebra/ring.hpp"

namespace branekit::algebra {

/* Finite module over a FiniteCommRing: an abelian group table plus a ring action. */
class FiniteModule {
public:
    FiniteModule(std::string name, FiniteCommRing ring, std::vector<std::string> elem_names,
                 std::vector<std::vector<int>> add_table, int zero,
                 std::vector<std::vector<int>> action);

    int size() const { return static_cast<int>(add_.size()); }
    int add(int m, int n) const { return add_[m][n]; }
    int zero() const { return zero_; }
    /* r.m for r a ring element id, m a module element id. */
    int act(int r, int m) const { return action_[r][m]; }

    const FiniteCommRing& ring() const { return ring_; }
    const std::string& name() const { return name_; }
    const std::string& elem_name(int m) const { return elem_names_[m]; }

private:
    std::string name_;
    FiniteCommRing ring_;
    std::vector<std::string> elem_names_;
    std::vector<std::vector<int>> add_;
    int zero_;
    std::vector<std::vector<int>> action_;  // action_[ring elem][module elem]
};

/* Exhaustive bilinearity / associativity / unitality scan. */
ValidationReport validate_module(const FiniteModule& M);

namespace modules {

FiniteModule zero_module(const FiniteCommRing& R);
/* R as rank-one free module over itself. */
FiniteModule free_rank_one(const FiniteCommRing& R);
/* Z/d as a Z/n module (requires d | n). */
FiniteModule cyclic(const FiniteCommRing& zn, int d);

}  // namespace modules

}  // namespace branekit::algebra
