#pragma once

#include <iosfwd>

#include "branekit/io/serialize.hpp"

namespace branekit::cli {

struct Options {
    std::uint64_t seed = 42;
    std::optional<int> max_dim;
    std::optional<int> carrier_cap;
    std::optional<int> quad_panels;
    std::optional<double> tolerance;
    int jobs = 1;
    bool timings = false;
};

struct CheckResult {
    std::string check;
    std::string target;
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::pair<std::string, std::string>> details;  // rendered in order
    double seconds = 0;
};

struct RunReport {
    std::string scenario;
    std::uint64_t seed = 0;
    Caps caps;
    std::vector<CheckResult> results;

    bool all_pass() const;
    void render(std::ostream& out, bool timings) const;
};

RunReport run_scenario(const io::json& doc, const Options& opts);

/* name -> one-line description, in catalog order. */
std::vector<std::pair<std::string, std::string>> check_catalog();

/* Entry point used by main() and by the tests; never throws. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branekit::cli
