#include "branekit/algebra/extension.hpp"

namespace branekit::algebra {

SquareZeroExtension square_zero_extend(const FiniteCommRing& A, const FiniteModule& M,
                                       const Caps& caps) {
    if (!M.ring().same_tables(A))
        throw InputError("square_zero_extend: module '" + M.name() + "' is not over ring '" +
                         A.name() + "'");
    const long long total = static_cast<long long>(A.size()) * M.size();
    if (total > caps.carrier_cap)
        throw CapError("square_zero_extend: carrier " + std::to_string(total) + " exceeds cap " +
                       std::to_string(caps.carrier_cap));
    const int n = static_cast<int>(total), ms = M.size();
    auto enc = [ms](int a, int m) { return a * ms + m; };
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < A.size(); ++a)
        for (int m = 0; m < ms; ++m) {
            names[enc(a, m)] = "(" + A.elem_name(a) + "," + M.elem_name(m) + ")";
            for (int b = 0; b < A.size(); ++b)
                for (int k = 0; k < ms; ++k) {
                    add[enc(a, m)][enc(b, k)] = enc(A.add(a, b), M.add(m, k));
                    mul[enc(a, m)][enc(b, k)] = enc(A.mul(a, b), M.add(M.act(a, k), M.act(b, m)));
                }
        }
    FiniteCommRing T(A.name() + "+" + M.name(), std::move(names), std::move(add), std::move(mul),
                     enc(A.zero(), M.zero()), enc(A.one(), M.zero()));
    std::vector<int> proj(n), split(A.size());
    for (int a = 0; a < A.size(); ++a) {
        split[a] = enc(a, M.zero());
        for (int m = 0; m < ms; ++m)
            proj[enc(a, m)] = a;
    }
    return {A, M, T, RingHom{T, A, std::move(proj)}, RingHom{A, T, std::move(split)}};
}

DualNumbers dual_numbers(const FiniteCommRing& A, const Caps& caps) {
    auto ext = square_zero_extend(A, modules::free_rank_one(A), caps);
    // relabel elements a + b e for readability; tables are untouched
    const int n = ext.total.size();
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        auto [a, b] = ext.decode(x);
        std::string s;
        if (a != A.zero() || b == A.zero())
            s = A.elem_name(a);
        if (b != A.zero()) {
            if (!s.empty())
                s += "+";
            s += (b == A.one() ? "" : A.elem_name(b)) + std::string("e");
        }
        names[x] = s;
        for (int y = 0; y < n; ++y) {
            add[x][y] = ext.total.add(x, y);
            mul[x][y] = ext.total.mul(x, y);
        }
    }
    FiniteCommRing T(A.name() + "[e]", std::move(names), std::move(add), std::move(mul),
                     ext.total.zero(), ext.total.one());
    RingHom aug{T, A, ext.projection.map};
    RingHom unit{A, T, ext.splitting.map};
    return {A, std::move(T), std::move(aug), std::move(unit)};
}

}  // namespace branekit::algebra
