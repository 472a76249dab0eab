#include "branekit/algebra/module.hpp"

namespace branekit::algebra {

FiniteModule::FiniteModule(std::string name, FiniteCommRing ring,
                           std::vector<std::string> elem_names,
                           std::vector<std::vector<int>> add_table, int zero,
                           std::vector<std::vector<int>> action)
    : name_(std::move(name)),
      ring_(std::move(ring)),
      elem_names_(std::move(elem_names)),
      add_(std::move(add_table)),
      zero_(zero),
      action_(std::move(action)) {
    const int n = static_cast<int>(add_.size());
    if (n == 0)
        throw InputError("module '" + name_ + "': empty carrier");
    if (static_cast<int>(elem_names_.size()) != n)
        throw InputError("module '" + name_ + "': name count mismatch");
    if (static_cast<int>(action_.size()) != ring_.size())
        throw InputError("module '" + name_ + "': action rows must match ring size");
    for (const auto& row : add_)
        if (static_cast<int>(row.size()) != n)
            throw InputError("module '" + name_ + "': ragged add table");
    for (const auto& row : action_)
        if (static_cast<int>(row.size()) != n)
            throw InputError("module '" + name_ + "': ragged action table");
}

ValidationReport validate_module(const FiniteModule& M) {
    ValidationReport rep;
    const auto& R = M.ring();
    const int n = M.size();
    for (int m = 0; m < n; ++m) {
        if (M.add(m, M.zero()) != m)
            rep.fail("module additive identity", M.elem_name(m));
        if (M.act(R.one(), m) != m)
            rep.fail("action unital", M.elem_name(m));
        bool has_inv = false;
        for (int k = 0; k < n; ++k)
            if (M.add(m, k) == M.zero())
                has_inv = true;
        if (!has_inv)
            rep.fail("module additive inverse missing", M.elem_name(m));
    }
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            if (M.add(m, k) != M.add(k, m))
                rep.fail("module addition commutative", M.elem_name(m) + "," + M.elem_name(k));
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                if (M.add(M.add(m, k), l) != M.add(m, M.add(k, l)))
                    rep.fail("module addition associative",
                             M.elem_name(m) + "," + M.elem_name(k) + "," + M.elem_name(l));
    for (int r = 0; r < R.size(); ++r)
        for (int s = 0; s < R.size(); ++s)
            for (int m = 0; m < n; ++m) {
                if (M.act(R.mul(r, s), m) != M.act(r, M.act(s, m)))
                    rep.fail("action associative",
                             R.elem_name(r) + "," + R.elem_name(s) + "," + M.elem_name(m));
                if (M.act(R.add(r, s), m) != M.add(M.act(r, m), M.act(s, m)))
                    rep.fail("action linear in ring",
                             R.elem_name(r) + "," + R.elem_name(s) + "," + M.elem_name(m));
            }
    for (int r = 0; r < R.size(); ++r)
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                if (M.act(r, M.add(m, k)) != M.add(M.act(r, m), M.act(r, k)))
                    rep.fail("action linear in module",
                             R.elem_name(r) + "," + M.elem_name(m) + "," + M.elem_name(k));
    return rep;
}

namespace modules {

FiniteModule zero_module(const FiniteCommRing& R) {
    return FiniteModule("0", R, {"0"}, {{0}}, 0,
                        std::vector<std::vector<int>>(R.size(), std::vector<int>{0}));
}

FiniteModule free_rank_one(const FiniteCommRing& R) {
    const int n = R.size();
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), act(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        names[a] = R.elem_name(a);
        for (int b = 0; b < n; ++b) {
            add[a][b] = R.add(a, b);
            act[a][b] = R.mul(a, b);
        }
    }
    return FiniteModule(R.name(), R, std::move(names), std::move(add), R.zero(), std::move(act));
}

FiniteModule cyclic(const FiniteCommRing& zn, int d) {
    const int n = zn.size();
    if (d <= 0 || n % d != 0)
        throw InputError("cyclic: " + std::to_string(d) + " does not divide " + std::to_string(n));
    // only sound for the standard Z/n tables
    std::vector<std::string> names(d);
    std::vector<std::vector<int>> add(d, std::vector<int>(d)), act(n, std::vector<int>(d));
    for (int a = 0; a < d; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < d; ++b)
            add[a][b] = (a + b) % d;
    }
    for (int r = 0; r < n; ++r)
        for (int m = 0; m < d; ++m)
            act[r][m] = (r * m) % d;
    return FiniteModule("Z/" + std::to_string(d), zn, std::move(names), std::move(add), 0,
                        std::move(act));
}

}  // namespace modules

}  // namespace branekit::algebra
