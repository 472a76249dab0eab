#include "branekit/cli/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "branekit/deformation/deformation.hpp"

namespace branekit::cli {

using io::Env;
using io::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string need_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw InputError(std::string("check: missing string field '") + key + "'");
    return j[key].get<std::string>();
}

int check_phase(const std::string& name) {
    if (name == "validate_rings" || name == "validate_modules" || name == "validate_spaces")
        return 0;
    if (name == "topology_axioms")
        return 1;
    if (name == "energy_axioms")
        return 2;
    if (name == "topology_transport" || name == "hypercover")
        return 3;
    if (name == "descent" || name == "brane_coherence")
        return 4;
    if (name == "derivations" || name == "delta_sampler" || name == "tangent_retraction" ||
        name == "relative_derivations")
        return 5;
    if (name == "uncertainty")
        return 6;
    if (name == "sharp_entropy" || name == "fuzzy_entropy" || name == "entropy_normalization")
        return 7;
    throw InputError("unknown check '" + name + "' (see `branekit list-checks`)");
}

void put(CheckResult& r, const std::string& k, const std::string& v) {
    r.details.push_back({k, v});
}

void run_entropy_expectation(CheckResult& r, const json& spec, double bits) {
    if (spec.contains("expect_bits")) {
        const double want = spec["expect_bits"].get<double>();
        const double tol = spec.value("tolerance", 1e-12);
        put(r, "expect_bits", fmt(want));
        if (std::abs(bits - want) > tol) {
            r.status = CheckStatus::Fail;
            put(r, "mismatch", fmt(std::abs(bits - want)) + " beyond " + fmt(tol));
        }
    }
}

CheckResult run_one_check(const json& spec, const Env& env, const Options& opts) {
    const std::string name = need_string(spec, "check");
    CheckResult r;
    r.check = name;
    r.status = CheckStatus::Pass;
    const Caps& caps = env.caps;

    if (name == "validate_rings") {
        r.target = "all rings";
        for (const auto& [nm, ring] : env.rings) {
            auto rep = algebra::validate_ring(ring);
            put(r, nm, rep.summary());
            if (!rep.ok())
                r.status = CheckStatus::Fail;
        }
    } else if (name == "validate_modules") {
        r.target = "all modules";
        for (const auto& [nm, mod] : env.modules) {
            auto rep = algebra::validate_module(mod);
            put(r, nm, rep.summary());
            if (!rep.ok())
                r.status = CheckStatus::Fail;
        }
    } else if (name == "validate_spaces") {
        r.target = "all spaces";
        for (const auto& [nm, sp] : env.spaces) {
            auto rep = simplicial::validate(sp);
            put(r, nm, rep.summary());
            if (!rep.ok())
                r.status = CheckStatus::Fail;
        }
    } else if (name == "topology_axioms") {
        const auto site_name = need_string(spec, "site");
        r.target = "site " + site_name;
        const auto& s = env.site_named(site_name);
        auto valid = s.validate();
        if (!valid.ok()) {
            r.status = CheckStatus::Fail;
            put(r, "site_valid", valid.summary());
            return r;
        }
        auto rep = site::check_topology_axioms(s, caps);
        for (const auto& e : rep.entries) {
            put(r, e.axiom, std::string(to_string(e.status)) +
                                (e.witness.empty() ? "" : " (" + e.witness + ")"));
            if (e.status != CheckStatus::Pass)
                r.status = CheckStatus::Fail;
        }
    } else if (name == "energy_axioms") {
        const auto energy_name = need_string(spec, "energy");
        r.target = "energy " + energy_name;
        const auto& E = env.energy(energy_name);
        auto rep = functors::run_axiom_suite(E, opts.seed, 2, caps);
        for (const auto& [axiom, v] : rep.entries())
            put(r, axiom, std::string(to_string(v->status)) +
                              (v->witness.empty() ? "" : " (" + v->witness + ")"));
        std::vector<std::string> expected;
        if (spec.contains("expect_fail"))
            expected = spec["expect_fail"].get<std::vector<std::string>>();
        auto failed = rep.failed_axioms();
        std::sort(expected.begin(), expected.end());
        std::sort(failed.begin(), failed.end());
        if (failed != expected)
            r.status = CheckStatus::Fail;
        if (rep.consequence_violation()) {
            r.status = CheckStatus::Fail;
            put(r, "consequence_violation",
                "a consequence check failed although its prerequisites pass");
        }
    } else if (name == "topology_transport") {
        const auto energy_name = need_string(spec, "energy");
        r.target = "energy " + energy_name;
        auto rep = functors::check_topology_transport(env.energy(energy_name), caps);
        for (const auto& e : rep.entries) {
            put(r, e.axiom, std::string(to_string(e.status)) +
                                (e.witness.empty() ? "" : " (" + e.witness + ")"));
            if (e.status != CheckStatus::Pass)
                r.status = CheckStatus::Fail;
        }
    } else if (name == "hypercover") {
        const auto site_name = need_string(spec, "site");
        const auto mor_name = need_string(spec, "morphism");
        const int up_to = spec.value("up_to", 2);
        r.target = "site " + site_name + ", cover " + mor_name;
        const auto& s = env.site_named(site_name);
        int mor = -1;
        for (int m = 0; m < s.cat().num_morphisms(); ++m)
            if (s.cat().morphism_name(m) == mor_name)
                mor = m;
        if (mor < 0)
            throw InputError("hypercover: unknown morphism '" + mor_name + "'");
        auto cech = site::cech_nerve(s, mor, up_to, caps);
        auto valid = validate(s, cech);
        put(r, "cech_valid", valid.summary());
        if (!valid.ok()) {
            r.status = CheckStatus::Fail;
            return r;
        }
        auto rep = site::is_hypercover(s, cech, up_to, caps);
        for (const auto& lv : rep.levels) {
            put(r, "level_" + std::to_string(lv.level),
                std::string(to_string(lv.status)) +
                    (lv.detail.empty() ? "" : " (" + lv.detail + ")"));
            if (lv.status != CheckStatus::Pass)
                r.status = CheckStatus::Fail;
        }
    } else if (name == "descent") {
        const auto functor_name = need_string(spec, "functor");
        r.target = "functor " + functor_name;
        std::vector<algebra::FiniteCommRing> rings;
        std::vector<std::string> ring_names;
        for (const auto& nm : spec.at("rings")) {
            ring_names.push_back(nm.get<std::string>());
            rings.push_back(env.ring(ring_names.back()));
        }
        const auto& cover = spec.at("cover");
        const std::string from = need_string(cover, "from"), to = need_string(cover, "to");
        int from_i = -1, to_i = -1;
        for (size_t i = 0; i < ring_names.size(); ++i) {
            if (ring_names[i] == from)
                from_i = static_cast<int>(i);
            if (ring_names[i] == to)
                to_i = static_cast<int>(i);
        }
        if (from_i < 0 || to_i < 0)
            throw InputError("descent: cover endpoints must be among the listed rings");
        std::vector<std::vector<site::CoverFamily>> covers(rings.size());
        auto aff0 = functors::build_aff_site(rings, covers, caps);
        int cmor = -1;
        for (int m = 0; m < aff0.site.cat().num_morphisms(); ++m)
            if (aff0.site.cat().src(m) == from_i && aff0.site.cat().tgt(m) == to_i)
                cmor = m;
        if (cmor < 0)
            throw InputError("descent: no Spec morphism between the covering endpoints");
        covers[to_i].push_back({cmor});
        auto aff = functors::build_aff_site(rings, covers, caps);
        auto cech = site::cech_nerve(aff.site, cmor, 1, caps);
        auto pre = site::is_hypercover(aff.site, cech, 1, caps);
        put(r, "hypercover", pre.ok() ? "pass" : "fail");
        if (!pre.ok()) {
            r.status = CheckStatus::Fail;
            return r;
        }
        auto v = functors::check_descent(env.functor(functor_name), aff, cech, caps);
        put(r, "descent", std::string(to_string(v.status)) +
                              (v.witness.empty() ? "" : " (" + v.witness + ")"));
        if (v.status != CheckStatus::Pass)
            r.status = CheckStatus::Fail;
    } else if (name == "brane_coherence") {
        const auto brane_name = need_string(spec, "brane");
        r.target = "brane " + brane_name;
        const auto& b = env.brane(brane_name);
        for (const auto& nm : spec.at("rings")) {
            const auto& A = env.ring(nm.get<std::string>());
            auto lhs = b.composite.evaluate(A, caps);
            auto rhs = b.observable.evaluate(b.energy.action.apply(A), caps);
            const bool same = lhs.same_tables(rhs);
            put(r, nm.get<std::string>(), same ? "pointwise equal" : "mismatch");
            if (!same)
                r.status = CheckStatus::Fail;
        }
    } else if (name == "derivations" || name == "delta_sampler") {
        const auto functor_name = need_string(spec, "functor");
        r.target = "functor " + functor_name;
        const auto& F = env.functor(functor_name);
        std::vector<deformation::SamplerEntry> entries;
        for (const auto& row : spec.at("rows")) {
            const auto rn = need_string(row, "ring"), mn = need_string(row, "module");
            entries.push_back(
                {rn, mn, row.value("point", 0), env.ring(rn), env.module(mn)});
        }
        auto rows = deformation::delta_sampler(F, entries, caps);
        auto it = spec.at("rows").begin();
        for (size_t i = 0; i < rows.size(); ++i, ++it) {
            std::ostringstream line;
            line << "branch=" << rows[i].branch << " pi0=" << rows[i].pi0
                 << " verdict=" << rows[i].verdict;
            if (!rows[i].witness.empty())
                line << " (" << rows[i].witness << ")";
            put(r, rows[i].ring + "+" + rows[i].module + "@" + std::to_string(rows[i].point),
                line.str());
            if (it->contains("expect_pi0") && (*it)["expect_pi0"].get<int>() != rows[i].pi0) {
                r.status = CheckStatus::Fail;
                put(r, "mismatch", "expected pi0 = " +
                                       std::to_string((*it)["expect_pi0"].get<int>()));
            }
        }
    } else if (name == "tangent_retraction") {
        const auto functor_name = need_string(spec, "functor");
        r.target = "functor " + functor_name;
        const auto& F = env.functor(functor_name);
        for (const auto& nm : spec.at("rings")) {
            const auto& A = env.ring(nm.get<std::string>());
            try {
                auto t = deformation::tangent(F, A, caps);
                put(r, nm.get<std::string>(),
                    "retraction exact, tangent vertices = " + std::to_string(t.space.count(0)));
            } catch (const InputError& e) {
                r.status = CheckStatus::Fail;
                put(r, nm.get<std::string>(), e.what());
            }
        }
    } else if (name == "relative_derivations") {
        const auto functor_name = need_string(spec, "functor");
        r.target = "functor " + functor_name;
        auto d = deformation::relative_derivations(
            env.functor(functor_name), env.ring(need_string(spec, "ring")),
            spec.value("point", 0), env.module(need_string(spec, "module")), caps);
        put(r, "branch", to_string(d.fiber.branch));
        put(r, "pi0", std::to_string(d.components()));
        auto v = d.verdict();
        put(r, "verdict", std::string(to_string(v.status)) + " (" + v.witness + ")");
        if (spec.contains("expect_pi0") && spec["expect_pi0"].get<int>() != d.components())
            r.status = CheckStatus::Fail;
    } else if (name == "uncertainty") {
        const auto brane_name = need_string(spec, "brane");
        r.target = "brane " + brane_name;
        const auto& b = env.brane(brane_name);
        const auto& A = env.ring(need_string(spec, "ring"));
        const auto& M = env.module(need_string(spec, "module"));
        const int point = spec.value("point", 0);
        auto v_side = deformation::relative_derivations(b.composite, A, point, M, caps);
        auto e_side = deformation::derivations(b.composite, A, point, M, caps);
        auto verdict = deformation::uncertainty_product(v_side, e_side);
        put(r, "v_side",
            std::string("Der_{V/TV}: branch=") + to_string(v_side.fiber.branch) +
                " pi0=" + std::to_string(v_side.components()) + " " +
                to_string(verdict.v_side.status) + " (" + verdict.v_side.witness + ")");
        put(r, "e_side",
            std::string("Der_E: branch=") + to_string(e_side.fiber.branch) +
                " pi0=" + std::to_string(e_side.components()) + " " +
                to_string(verdict.e_side.status) + " (" + verdict.e_side.witness + ")");
        put(r, "product", std::string(to_string(verdict.product.status)) + " (" +
                              verdict.product.witness + ")");
        put(r, "uncertainty", to_string(verdict.uncertainty));
        if (spec.contains("expect") &&
            spec["expect"].get<std::string>() != to_string(verdict.uncertainty))
            r.status = CheckStatus::Fail;
    } else if (name == "sharp_entropy") {
        const auto sys_name = need_string(spec, "system");
        r.target = "system " + sys_name;
        auto rep = entropy::sharp_entropy(env.system(sys_name));
        put(r, "Z", fmt(rep.Z));
        put(r, "S_bits", fmt(rep.entropy_bits));
        put(r, "normalization_residual", fmt(rep.normalization_residual));
        run_entropy_expectation(r, spec, rep.entropy_bits);
    } else if (name == "fuzzy_entropy") {
        const auto sys_name = need_string(spec, "system");
        r.target = "system " + sys_name;
        auto cfg = env.fuzz_of(sys_name);
        if (opts.quad_panels)
            cfg.panels = *opts.quad_panels;
        if (opts.tolerance)
            cfg.tolerance = *opts.tolerance;
        auto rep = entropy::fuzzy_entropy(env.system(sys_name), cfg);
        put(r, "Z", fmt(rep.Z));
        put(r, "S_bits", fmt(rep.entropy_bits));
        put(r, "normalization_residual", fmt(rep.normalization_residual));
        put(r, "quadrature_error", fmt(rep.quadrature_error));
        run_entropy_expectation(r, spec, rep.entropy_bits);
    } else if (name == "entropy_normalization") {
        const auto sys_name = need_string(spec, "system");
        r.target = "system " + sys_name;
        auto cfg = env.fuzz_of(sys_name);
        if (opts.quad_panels)
            cfg.panels = *opts.quad_panels;
        if (opts.tolerance)
            cfg.tolerance = *opts.tolerance;
        const double res = entropy::normalization_check(env.system(sys_name), cfg);
        put(r, "residual", fmt(res));
        put(r, "tolerance", fmt(cfg.tolerance));
        if (res > cfg.tolerance)
            r.status = CheckStatus::Fail;
    } else {
        throw InputError("unknown check '" + name + "'");
    }
    return r;
}

}  // namespace

bool RunReport::all_pass() const {
    for (const auto& r : results)
        if (r.status != CheckStatus::Pass)
            return false;
    return true;
}

void RunReport::render(std::ostream& out, bool timings) const {
    out << "scenario: " << scenario << "\n";
    out << "seed: " << seed << "\n";
    out << "caps: max_dim=" << caps.max_dim << " carrier_cap=" << caps.carrier_cap
        << " ex_cap=" << caps.ex_cap << "\n";
    out << "checks:\n";
    int pass = 0, fail = 0;
    for (const auto& r : results) {
        out << "- check: " << r.check << "\n";
        out << "  target: " << r.target << "\n";
        out << "  status: " << to_string(r.status) << "\n";
        for (const auto& [k, v] : r.details)
            out << "  " << k << ": " << v << "\n";
        (r.status == CheckStatus::Pass ? pass : fail) += 1;
    }
    out << "summary: pass=" << pass << " fail=" << fail << "\n";
    out << "result: " << (fail == 0 ? "PASS" : "FAIL") << "\n";
    if (timings) {
        out << "timings:\n";
        for (const auto& r : results) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
            out << "- " << r.check << " " << r.target << ": " << buf << "\n";
        }
    }
}

RunReport run_scenario(const json& doc, const Options& opts) {
    Caps caps;
    Env env = io::build_env(doc, caps);
    if (opts.max_dim)
        env.caps.max_dim = *opts.max_dim;
    if (opts.carrier_cap)
        env.caps.carrier_cap = *opts.carrier_cap;

    RunReport report;
    report.scenario = doc.value("name", std::string("unnamed"));
    report.seed = opts.seed;
    report.caps = env.caps;

    if (!doc.contains("checks") || !doc["checks"].is_array())
        throw InputError("scenario: missing 'checks' array");
    std::vector<json> specs;
    for (const auto& c : doc["checks"])
        specs.push_back(c);
    // validate names and order by (phase, input position)
    std::vector<std::pair<int, size_t>> order;
    for (size_t i = 0; i < specs.size(); ++i)
        order.push_back({check_phase(need_string(specs[i], "check")), i});
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    report.results.resize(specs.size());
    size_t cursor = 0;
    while (cursor < order.size()) {
        size_t end = cursor;
        while (end < order.size() && order[end].first == order[cursor].first)
            ++end;
        // run one phase, possibly on several workers
        std::atomic<size_t> next{cursor};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                const size_t k = next.fetch_add(1);
                if (k >= end)
                    return;
                const size_t idx = order[k].second;
                try {
                    const auto t0 = std::chrono::steady_clock::now();
                    report.results[idx] = run_one_check(specs[idx], env, opts);
                    report.results[idx].seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        const int nthreads = std::max(1, std::min<int>(opts.jobs, static_cast<int>(end - cursor)));
        if (nthreads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        cursor = end;
    }
    // render in phase order so the report follows the dependency chain
    std::vector<CheckResult> ordered;
    ordered.reserve(report.results.size());
    for (const auto& [phase, idx] : order) {
        (void)phase;
        ordered.push_back(std::move(report.results[idx]));
    }
    report.results = std::move(ordered);
    return report;
}

std::vector<std::pair<std::string, std::string>> check_catalog() {
    return {
        {"validate_rings", "exhaustive ring axiom scan over every named ring"},
        {"validate_modules", "exhaustive module axiom scan over every named module"},
        {"validate_spaces", "simplicial identity scan over every named space"},
        {"topology_axioms", "isomorphism, composition and pullback stability of a site"},
        {"energy_axioms", "the energy axiom suite with proof-order gating"},
        {"topology_transport", "transported covers form a topology on the image site"},
        {"hypercover", "Cech nerve of a named covering map checked levelwise"},
        {"descent", "F(B) against the equalizer of F(A0) => F(A1) along a cover"},
        {"brane_coherence", "composite evaluation agrees with observable after energy"},
        {"derivations", "hofiber(F(A+M) -> F(A)) summaries with optional pi0 oracles"},
        {"delta_sampler", "derivation-space table over a universe of (A, x, M)"},
        {"tangent_retraction", "projection o section = id for tangent evaluations"},
        {"relative_derivations", "hofiber of d(sigma) at the zero derivation"},
        {"uncertainty", "non-contractibility verdict for Der_{V/TV} x Der_E"},
        {"sharp_entropy", "exact finite-sum entropy in bits"},
        {"fuzzy_entropy", "quadrature entropy of deviation-smeared states"},
        {"entropy_normalization", "sum-integral of the fuzzy density against 1"},
    };
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("parse error in '" + path + "': " + e.what());
    }
}

int cmd_run(const std::string& path, const Options& opts, std::ostream& out) {
    auto doc = load_json(path);
    auto report = run_scenario(doc, opts);
    report.render(out, opts.timings);
    return report.all_pass() ? 0 : 1;
}

int cmd_uncertainty(const std::string& path, const Options& opts, std::ostream& out) {
    auto doc = load_json(path);
    if (!doc.contains("checks"))
        throw InputError("uncertainty: the file carries no checks");
    json filtered = doc;
    filtered["checks"] = json::array();
    for (const auto& c : doc["checks"])
        if (c.value("check", "") == "uncertainty")
            filtered["checks"].push_back(c);
    if (filtered["checks"].empty())
        throw InputError("uncertainty: the file carries no uncertainty checks");
    auto report = run_scenario(filtered, opts);
    report.render(out, opts.timings);
    return report.all_pass() ? 0 : 1;
}

int cmd_entropy(const std::string& path, const Options& opts, bool csv, std::ostream& out) {
    auto doc = load_json(path);
    if (!doc.contains("energies"))
        throw InputError("entropy: the file needs an 'energies' array");
    entropy::StateSystem sys{doc["energies"].get<std::vector<double>>(),
                             doc.value("beta", 1.0)};
    entropy::FuzzConfig cfg =
        doc.contains("fuzz") ? io::make_fuzz(doc["fuzz"]) : entropy::FuzzConfig{};
    if (opts.quad_panels)
        cfg.panels = *opts.quad_panels;
    if (opts.tolerance)
        cfg.tolerance = *opts.tolerance;
    auto sharp = entropy::sharp_entropy(sys);
    bool fuzzy_ok = true;
    entropy::EntropyReport fuzzy;
    try {
        fuzzy = entropy::fuzzy_entropy(sys, cfg);
    } catch (const InputError&) {
        fuzzy_ok = false;  // nonpositive energies: the sharp story still stands
    }
    if (csv) {
        out << "index,energy,sharp_p" << (fuzzy_ok ? ",fuzzy_mass" : "") << "\n";
        for (size_t i = 0; i < sys.energies.size(); ++i) {
            out << i << "," << fmt(sys.energies[i]) << "," << fmt(sharp.contributions[i]);
            if (fuzzy_ok)
                out << "," << fmt(fuzzy.contributions[i]);
            out << "\n";
        }
        return 0;
    }
    out << "states: " << sys.energies.size() << "\n";
    out << "beta: " << fmt(sys.beta) << "\n";
    out << "sharp:\n";
    out << "  Z: " << fmt(sharp.Z) << "\n";
    out << "  S_bits: " << fmt(sharp.entropy_bits) << "\n";
    out << "  normalization_residual: " << fmt(sharp.normalization_residual) << "\n";
    if (fuzzy_ok) {
        out << "fuzzy:\n";
        out << "  rule: " << cfg.rule << "\n";
        out << "  panels: " << cfg.panels << "\n";
        out << "  Z: " << fmt(fuzzy.Z) << "\n";
        out << "  S_bits: " << fmt(fuzzy.entropy_bits) << "\n";
        out << "  normalization_residual: " << fmt(fuzzy.normalization_residual) << "\n";
        out << "  quadrature_error: " << fmt(fuzzy.quadrature_error) << "\n";
    } else {
        out << "fuzzy: skipped (requires strictly positive energies)\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"desk-scale checker for energy functors, derivation spaces and fuzzy entropy",
                 "branekit"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--seed", opts.seed, "seed for deterministic sampling")
        ->envname("BRANEKIT_SEED");
    int max_dim = -1, carrier_cap = -1, quad_panels = -1, jobs = 1;
    double tolerance = -1;
    app.add_option("--max-dim", max_dim, "simplicial truncation dimension")
        ->envname("BRANEKIT_MAX_DIM");
    app.add_option("--carrier-cap", carrier_cap, "largest allowed ring carrier")
        ->envname("BRANEKIT_CARRIER_CAP");
    app.add_option("--quad-panels", quad_panels, "quadrature panel count override")
        ->envname("BRANEKIT_QUAD_PANELS");
    app.add_option("--tolerance", tolerance, "quadrature tolerance override")
        ->envname("BRANEKIT_TOLERANCE");
    app.add_option("--jobs", jobs, "parallel workers within a check phase")
        ->envname("BRANEKIT_JOBS");
    app.add_flag("--timings", opts.timings, "append per-check timings to the report");

    std::string run_path, unc_path, ent_path;
    bool csv = false;
    auto* crun = app.add_subcommand("run", "run every check in a scenario file");
    crun->add_option("file", run_path, "scenario file")->required();
    auto* cunc = app.add_subcommand("uncertainty", "run only the uncertainty checks of a file");
    cunc->add_option("file", unc_path, "scenario file")->required();
    auto* cent = app.add_subcommand("entropy", "entropy report for a state table");
    cent->add_option("file", ent_path, "state table file")->required();
    cent->add_flag("--csv", csv, "emit the per-state table as CSV");
    auto* clist = app.add_subcommand("list-checks", "print the check catalog");
    auto* cschema = app.add_subcommand("schema", "print the scenario schema");

    try {
        // CLI11 consumes a reversed vector without the program name
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "branekit: " << e.what() << "\n";
        return 2;
    }
    if (max_dim > 0)
        opts.max_dim = max_dim;
    if (carrier_cap > 0)
        opts.carrier_cap = carrier_cap;
    if (quad_panels > 0)
        opts.quad_panels = quad_panels;
    if (tolerance > 0)
        opts.tolerance = tolerance;
    opts.jobs = std::max(1, jobs);

    try {
        if (crun->parsed())
            return cmd_run(run_path, opts, out);
        if (cunc->parsed())
            return cmd_uncertainty(unc_path, opts, out);
        if (cent->parsed())
            return cmd_entropy(ent_path, opts, csv, out);
        if (clist->parsed()) {
            for (const auto& [name, desc] : check_catalog())
                out << name << " - " << desc << "\n";
            return 0;
        }
        if (cschema->parsed()) {
            out << io::schema_text();
            return 0;
        }
    } catch (const CapError& e) {
        err << "branekit: resource cap: " << e.what() << "\n";
        return 3;
    } catch (const IncompleteError& e) {
        err << "branekit: incomplete declaration: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "branekit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "branekit: internal error: " << e.what() << "\n";
        return 2;
    }
    err << "branekit: no command\n";
    return 2;
}

}  // namespace branekit::cli
