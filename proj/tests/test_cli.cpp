#include <doctest.h>

#include <fstream>
#include <sstream>

#include "branekit/cli/scenario.hpp"

using namespace branekit;

namespace {

std::string scenario_path(const std::string& name) {
    return std::string(BRANEKIT_SOURCE_DIR) + "/scenarios/" + name;
}

std::string golden_path(const std::string& name) {
    return std::string(BRANEKIT_SOURCE_DIR) + "/tests/golden/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CliOutcome {
    int exit_code;
    std::string out, err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden: identity_energy passes byte-for-byte") {
    auto r = run_cli({"run", scenario_path("identity_energy.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden_path("identity_energy.txt")));
}

TEST_CASE("golden: broken_cover fails with the cover witness and exit 1") {
    auto r = run_cli({"run", scenario_path("broken_cover.json")});
    CHECK(r.exit_code == 1);
    CHECK(r.out == slurp(golden_path("broken_cover.txt")));
    CHECK(r.out.find("preserves_covers: fail") != std::string::npos);
    CHECK(r.out.find("maps to non-cover") != std::string::npos);
}

TEST_CASE("golden: brane_uncertainty_demo verdict chain") {
    auto r = run_cli({"run", scenario_path("brane_uncertainty_demo.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden_path("brane_uncertainty_demo.txt")));
    CHECK(r.out.find("uncertainty: holds") != std::string::npos);
}

TEST_CASE("determinism: identical scenario and seed give identical bytes") {
    for (const char* s : {"identity_energy.json", "brane_uncertainty_demo.json"}) {
        auto a = run_cli({"--seed", "42", "run", scenario_path(s)});
        auto b = run_cli({"--seed", "42", "run", scenario_path(s)});
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("parallel execution matches the sequential report") {
    auto seq = run_cli({"run", scenario_path("identity_energy.json")});
    auto par = run_cli({"--jobs", "4", "run", scenario_path("identity_energy.json")});
    CHECK(par.exit_code == seq.exit_code);
    CHECK(par.out == seq.out);
}

TEST_CASE("exit-status contract: input and cap errors") {
    auto missing = run_cli({"run", "/nonexistent/file.json"});
    CHECK(missing.exit_code == 2);
    CHECK(!missing.err.empty());

    // parse error in the file
    const std::string tmp = "/tmp/branekit_bad.json";
    {
        std::ofstream out(tmp);
        out << "{ not json";
    }
    auto bad = run_cli({"run", tmp});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("parse error") != std::string::npos);

    // unknown check name is a parse-time rejection
    const std::string tmp2 = "/tmp/branekit_badcheck.json";
    {
        std::ofstream out(tmp2);
        out << R"({"name":"x","checks":[{"check":"no_such_check"}]})";
    }
    auto unknown = run_cli({"run", tmp2});
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("unknown check") != std::string::npos);

    // a carrier cap violation surfaces as a resource error
    const std::string tmp3 = "/tmp/branekit_cap.json";
    {
        std::ofstream out(tmp3);
        out << R"({"name":"cap","rings":[{"name":"big","kind":"zmod","n":100}],)"
            << R"("checks":[{"check":"validate_rings"}]})";
    }
    auto cap = run_cli({"--carrier-cap", "64", "run", tmp3});
    CHECK(cap.exit_code == 3);
}

TEST_CASE("uncertainty command runs only the uncertainty checks") {
    auto r = run_cli({"uncertainty", scenario_path("brane_uncertainty_demo.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check: uncertainty") != std::string::npos);
    CHECK(r.out.find("check: derivations") == std::string::npos);
    CHECK(r.out.find("v_side") != std::string::npos);
    CHECK(r.out.find("e_side") != std::string::npos);

    auto none = run_cli({"uncertainty", scenario_path("broken_cover.json")});
    CHECK(none.exit_code == 2);
}

TEST_CASE("entropy command emits the report and the CSV table") {
    const std::string tmp = "/tmp/branekit_states.json";
    {
        std::ofstream out(tmp);
        out << R"({"energies":[1.0,1.0],"beta":1.0,)"
            << R"("fuzz":{"rule":"gl8","panels":64,"tolerance":1e-9}})";
    }
    auto r = run_cli({"entropy", tmp});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sharp:") != std::string::npos);
    CHECK(r.out.find("S_bits: 1\n") != std::string::npos);
    CHECK(r.out.find("fuzzy:") != std::string::npos);

    auto csv = run_cli({"entropy", tmp, "--csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("index,energy,sharp_p,fuzzy_mass") != std::string::npos);
}

TEST_CASE("list-checks and schema") {
    auto lc = run_cli({"list-checks"});
    CHECK(lc.exit_code == 0);
    int lines = 0;
    for (char c : lc.out)
        if (c == '\n')
            ++lines;
    CHECK(lines >= 12);
    CHECK(lc.out.find("uncertainty") != std::string::npos);

    auto sc = run_cli({"schema"});
    CHECK(sc.exit_code == 0);
    CHECK(sc.out.find("Ring builders") != std::string::npos);
    // every builder kind used by the shipped scenarios is documented
    for (const char* kind : {"zmod", "trunc_poly", "dual_numbers", "power", "subset_lattice",
                             "identity_on_objects", "representable"})
        CHECK(sc.out.find(kind) != std::string::npos);
}

TEST_CASE("schema round-trip: shipped scenarios re-serialize to the same document") {
    for (const char* s :
         {"identity_energy.json", "broken_cover.json", "brane_uncertainty_demo.json"}) {
        std::ifstream in(scenario_path(s));
        auto doc = io::json::parse(in);
        auto again = io::json::parse(doc.dump());
        CHECK(doc == again);
        // and the environment builds without complaint
        Caps caps;
        auto env = io::build_env(doc, caps);
        CHECK(env.rings.size() == (doc.contains("rings") ? doc["rings"].size() : 0));
    }
}

TEST_CASE("timings flag appends a section after the body") {
    auto with = run_cli({"--timings", "run", scenario_path("brane_uncertainty_demo.json")});
    auto without = run_cli({"run", scenario_path("brane_uncertainty_demo.json")});
    CHECK(with.out.find("timings:") != std::string::npos);
    CHECK(without.out.find("timings:") == std::string::npos);
    CHECK(with.out.substr(0, without.out.size()) == without.out);
}
