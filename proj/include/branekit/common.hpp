#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace branekit {

/* Bad user input (malformed tables, unknown names, schema violations). CLI exit 2. */
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A configured resource cap was exceeded. CLI exit 3. */
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A declared limit/coproduct/pullback needed by a computation is missing.
 * Carries the human-readable description of the missing piece. */
struct IncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Global resource caps. Exceeding any of them raises CapError, never silent sampling. */
struct Caps {
    int carrier_cap = 64;          // max ring/module carrier size
    int max_dim = 4;               // simplicial truncation dimension
    int ex_cap = 2;                // max Ex^k iterations
    long map_search_nodes = 5'000'000;  // backtracking budget for map enumeration
    int simplex_cap = 50'000;      // max simplices per level in constructed spaces
};

struct Violation {
    std::string rule;
    std::string witness;
};

/* Outcome of an exhaustive axiom scan: empty list of violations means pass. */
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void fail(std::string rule, std::string witness) {
        violations.push_back({std::move(rule), std::move(witness)});
    }

    std::string summary() const {
        if (ok())
            return "pass";
        std::ostringstream os;
        os << violations.size() << " violation(s):";
        for (const auto& v : violations)
            os << " [" << v.rule << " @ " << v.witness << "]";
        return os.str();
    }
};

enum class CheckStatus { Pass, Fail, Skipped, Inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace branekit
