#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branekit/common.hpp"

namespace branekit::simplicial {

/* Provenance flags used as a positive contractibility certificate: the space is
 * the nerve of a category with an initial or terminal object (a cone). Products
 * of nerves keep the flags, since nerve(C) x nerve(D) = nerve(C x D). */
struct ConeFlags {
    bool has_initial = false;
    bool has_terminal = false;
};

/* Truncated simplicial set, levelwise finite.
 * Simplices at level n are ids 0..count(n)-1; face and degeneracy tables are total.
 * Degeneracy flags are derived from the tables (z is degenerate iff z = s_i d_{i+1} z). */
class SimplicialSet {
public:
    SimplicialSet(int dim, std::vector<int> counts,
                  std::vector<std::vector<std::vector<int>>> faces,
                  std::vector<std::vector<std::vector<int>>> degens,
                  std::optional<ConeFlags> cone = std::nullopt);

    int dim() const { return dim_; }
    int count(int n) const { return counts_[n]; }
    /* d_i : X_n -> X_{n-1}, 1 <= n <= dim, 0 <= i <= n */
    int face(int n, int i, int s) const { return faces_[n][i][s]; }
    /* s_i : X_n -> X_{n+1}, 0 <= n < dim, 0 <= i <= n */
    int degen(int n, int i, int s) const { return degens_[n][i][s]; }

    bool degenerate(int n, int s) const { return degenerate_[n][s]; }
    int nondegenerate_count(int n) const { return nondeg_counts_[n]; }
    /* Ids of nondegenerate n-simplices, ascending. */
    const std::vector<int>& nondegenerate(int n) const { return nondeg_[n]; }
    /* Largest level carrying a nondegenerate simplex (-1 when empty). */
    int top_nondegenerate_dim() const;
    bool is_empty() const { return counts_[0] == 0; }
    bool is_discrete() const { return top_nondegenerate_dim() <= 0; }

    const std::optional<ConeFlags>& cone() const { return cone_; }
    void set_cone(std::optional<ConeFlags> c) { cone_ = std::move(c); }

    bool same_tables(const SimplicialSet& o) const;

private:
    int dim_;
    std::vector<int> counts_;
    std::vector<std::vector<std::vector<int>>> faces_;   // faces_[n][i][s], n >= 1
    std::vector<std::vector<std::vector<int>>> degens_;  // degens_[n][i][s], n < dim
    std::vector<std::vector<bool>> degenerate_;
    std::vector<std::vector<int>> nondeg_;
    std::vector<int> nondeg_counts_;
    std::optional<ConeFlags> cone_;
};

/* Exhaustive check of all simplicial identities within the truncation. */
ValidationReport validate(const SimplicialSet& X);

/* Degreewise product with componentwise structure maps; truncation = min of the two.
 * Pair (x,y) at level n is encoded as x*Y.count(n)+y. */
SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y);

namespace spaces {

SimplicialSet empty_space(int dim);
SimplicialSet discrete(int points, int dim);
/* Monotone sequences [m] -> [n] in lexicographic order per level. */
SimplicialSet delta(int n, int dim);
/* delta(n) minus the interior: sequences that miss some value of [n]. */
SimplicialSet boundary_delta(int n, int dim);

/* Lexicographic rank helpers for delta's simplex indexing. */
std::vector<std::vector<int>> monotone_sequences(int len_minus_one, int top);
int monotone_rank(const std::vector<int>& seq, int top);

}  // namespace spaces

}  // namespace branekit::simplicial
