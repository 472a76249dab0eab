#include "branekit/entropy/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace branekit::entropy {

namespace {

struct GaussRule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

const GaussRule& rule_by_name(const std::string& name) {
    static const GaussRule gl2{{-0.5773502691896257645091488, 0.5773502691896257645091488},
                               {1.0, 1.0}};
    static const GaussRule gl4{{-0.8611363115940525752239465, -0.3399810435848562648026658,
                                0.3399810435848562648026658, 0.8611363115940525752239465},
                               {0.3478548451374538573730639, 0.6521451548625461426269361,
                                0.6521451548625461426269361, 0.3478548451374538573730639}};
    static const GaussRule gl8{
        {-0.9602898564975362316835609, -0.7966664774136267395915539,
         -0.5255324099163289858177390, -0.1834346424956498049394761,
         0.1834346424956498049394761, 0.5255324099163289858177390,
         0.7966664774136267395915539, 0.9602898564975362316835609},
        {0.1012285362903762591525314, 0.2223810344533744705443560,
         0.3137066458778872873379622, 0.3626837833783619829651504,
         0.3626837833783619829651504, 0.3137066458778872873379622,
         0.2223810344533744705443560, 0.1012285362903762591525314}};
    if (name == "gl2")
        return gl2;
    if (name == "gl4")
        return gl4;
    if (name == "gl8")
        return gl8;
    throw InputError("unknown quadrature rule '" + name + "' (use gl2, gl4 or gl8)");
}

void check_system(const StateSystem& sys, bool positive_energies) {
    if (sys.energies.empty())
        throw InputError("state system has no energies");
    if (!(sys.beta > 0))
        throw InputError("beta must be strictly positive");
    for (double e : sys.energies) {
        if (positive_energies && !(e > 0))
            throw InputError("fuzzy operations require strictly positive energies");
        if (!positive_energies && e < 0)
            throw InputError("energies must be nonnegative");
    }
}

void check_config(const FuzzConfig& cfg) {
    if (cfg.panels < 2)
        throw InputError("panel count must be at least 2");
    if (!(cfg.tolerance > 0))
        throw InputError("tolerance must be positive");
    rule_by_name(cfg.rule);
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        const GaussRule& rule, int panels) {
    const double h = (b - a) / panels;
    double acc = 0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + h / 2, half = h / 2;
        double local = 0;
        for (size_t k = 0; k < rule.nodes.size(); ++k)
            local += rule.weights[k] * f(mid + half * rule.nodes[k]);
        acc += local * half;
    }
    return acc;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const FuzzConfig& cfg) {
    check_config(cfg);
    return integrate_panels(f, a, b, rule_by_name(cfg.rule), cfg.panels);
}

EntropyReport sharp_entropy(const StateSystem& sys) {
    check_system(sys, false);
    const double emin = *std::min_element(sys.energies.begin(), sys.energies.end());
    double zs = 0;
    std::vector<double> w(sys.energies.size());
    for (size_t i = 0; i < sys.energies.size(); ++i) {
        w[i] = std::exp(-sys.beta * (sys.energies[i] - emin));
        zs += w[i];
    }
    EntropyReport rep;
    rep.Z = std::exp(-sys.beta * emin) * zs;
    rep.contributions.resize(w.size());
    double s = 0, total = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        const double p = w[i] / zs;
        rep.contributions[i] = p;
        total += p;
        if (p > 0)
            s -= p * std::log2(p);
    }
    rep.entropy_bits = s;
    rep.normalization_residual = std::abs(total - 1.0);
    return rep;
}

FuzzyPartition fuzzy_partition(const StateSystem& sys, const FuzzConfig& cfg) {
    check_system(sys, true);
    check_config(cfg);
    const auto& rule = rule_by_name(cfg.rule);
    double z = 0, zh = 0;
    for (double e : sys.energies) {
        auto f = [&](double d) { return std::exp(-sys.beta * (e + d)); };
        z += integrate_panels(f, -e, e, rule, cfg.panels);
        zh += integrate_panels(f, -e, e, rule, std::max(2, cfg.panels / 2));
    }
    return {z, std::abs(z - zh)};
}

EntropyReport fuzzy_entropy(const StateSystem& sys, const FuzzConfig& cfg) {
    auto part = fuzzy_partition(sys, cfg);
    const auto& rule = rule_by_name(cfg.rule);
    EntropyReport rep;
    rep.Z = part.Z;
    rep.contributions.resize(sys.energies.size());
    double s = 0, sh = 0, total = 0;
    for (size_t i = 0; i < sys.energies.size(); ++i) {
        const double e = sys.energies[i];
        auto p = [&](double d) { return std::exp(-sys.beta * (e + d)) / part.Z; };
        auto integrand = [&](double d) {
            const double v = p(d);
            return v > 0 ? -v * std::log2(v) : 0.0;
        };
        rep.contributions[i] = integrate_panels(p, -e, e, rule, cfg.panels);
        total += rep.contributions[i];
        s += integrate_panels(integrand, -e, e, rule, cfg.panels);
        sh += integrate_panels(integrand, -e, e, rule, std::max(2, cfg.panels / 2));
    }
    rep.entropy_bits = s;
    rep.normalization_residual = std::abs(total - 1.0);
    rep.quadrature_error = part.error_estimate + std::abs(s - sh);
    return rep;
}

double normalization_check(const StateSystem& sys, const FuzzConfig& cfg,
                           std::optional<double> z_override) {
    auto part = fuzzy_partition(sys, cfg);
    const double z = z_override.value_or(part.Z);
    const auto& rule = rule_by_name(cfg.rule);
    double total = 0;
    for (double e : sys.energies) {
        auto p = [&](double d) { return std::exp(-sys.beta * (e + d)) / z; };
        total += integrate_panels(p, -e, e, rule, cfg.panels);
    }
    return std::abs(total - 1.0);
}

}  // namespace branekit::entropy
