#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branekit/common.hpp"

namespace branekit::entropy {

/* Energies in dimensionless units with an inverse-energy beta. */
struct StateSystem {
    std::vector<double> energies;
    double beta = 1.0;
};

/* Composite Gauss-Legendre configuration. */
struct FuzzConfig {
    std::string rule = "gl4";  // gl2 | gl4 | gl8
    int panels = 64;
    double tolerance = 1e-9;
};

struct EntropyReport {
    double Z = 0;
    std::vector<double> contributions;  // per-state probability mass
    double entropy_bits = 0;
    double normalization_residual = 0;
    double quadrature_error = 0;  // zero for the exact finite sums
};

/* Composite Gauss-Legendre integral of f over [a, b]. */
double integrate(const std::function<double(double)>& f, double a, double b,
                 const FuzzConfig& cfg);

/* S = -sum p log2 p with p = exp(-beta e)/Z, exact finite sums. */
EntropyReport sharp_entropy(const StateSystem& sys);

struct FuzzyPartition {
    double Z = 0;
    double error_estimate = 0;
};

/* Z = sum_i of the integral of exp(-beta(e_i + d)) for d in [-e_i, e_i]. */
FuzzyPartition fuzzy_partition(const StateSystem& sys, const FuzzConfig& cfg);

/* S_N = -sum_i of the integral of p log2 p with p = exp(-beta(e_i + d))/Z.
 * This is a differential entropy and may be negative. */
EntropyReport fuzzy_entropy(const StateSystem& sys, const FuzzConfig& cfg);

/* |sum_i integral of p - 1| under the configured rule. z_override replaces the
 * partition value, as a fault-injection hook for tests. */
double normalization_check(const StateSystem& sys, const FuzzConfig& cfg,
                           std::optional<double> z_override = std::nullopt);

}  // namespace branekit::entropy
