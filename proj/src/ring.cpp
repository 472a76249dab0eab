#include "branekit/algebra/ring.hpp"

#include <algorithm>

namespace branekit::algebra {

namespace {

std::string triple(const FiniteCommRing& R, int a, int b) {
    return "(" + R.elem_name(a) + "," + R.elem_name(b) + ")";
}

std::string triple(const FiniteCommRing& R, int a, int b, int c) {
    return "(" + R.elem_name(a) + "," + R.elem_name(b) + "," + R.elem_name(c) + ")";
}

}  // namespace

FiniteCommRing::FiniteCommRing(std::string name, std::vector<std::string> elem_names,
                               std::vector<std::vector<int>> add_table,
                               std::vector<std::vector<int>> mul_table, int zero, int one)
    : name_(std::move(name)),
      elem_names_(std::move(elem_names)),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one) {
    const int n = static_cast<int>(add_.size());
    if (n == 0)
        throw InputError("ring '" + name_ + "': empty carrier");
    if (static_cast<int>(mul_.size()) != n || static_cast<int>(elem_names_.size()) != n)
        throw InputError("ring '" + name_ + "': table sizes disagree");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(add_[i].size()) != n || static_cast<int>(mul_[i].size()) != n)
            throw InputError("ring '" + name_ + "': ragged table row");
        for (int j = 0; j < n; ++j)
            if (add_[i][j] < 0 || add_[i][j] >= n || mul_[i][j] < 0 || mul_[i][j] >= n)
                throw InputError("ring '" + name_ + "': table entry out of range");
    }
    if (zero_ < 0 || zero_ >= n || one_ < 0 || one_ >= n)
        throw InputError("ring '" + name_ + "': zero/one out of range");
    // negation lookup; validate_ring reports if some element has none
    neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add_[a][b] == zero_) {
                neg_[a] = b;
                break;
            }
}

bool FiniteCommRing::same_tables(const FiniteCommRing& o) const {
    return add_ == o.add_ && mul_ == o.mul_ && zero_ == o.zero_ && one_ == o.one_;
}

ValidationReport validate_ring(const FiniteCommRing& R) {
    ValidationReport rep;
    const int n = R.size();
    // abelian group under +
    for (int a = 0; a < n; ++a) {
        if (R.add(a, R.zero()) != a)
            rep.fail("additive identity", R.elem_name(a));
        if (R.neg(a) < 0)
            rep.fail("additive inverse missing", R.elem_name(a));
        if (R.mul(a, R.one()) != a)
            rep.fail("multiplicative identity", R.elem_name(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (R.add(a, b) != R.add(b, a))
                rep.fail("addition commutative", triple(R, a, b));
            if (R.mul(a, b) != R.mul(b, a))
                rep.fail("multiplication commutative", triple(R, a, b));
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                    rep.fail("addition associative", triple(R, a, b, c));
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    rep.fail("multiplication associative", triple(R, a, b, c));
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
                    rep.fail("distributivity", triple(R, a, b, c));
            }
    return rep;
}

namespace rings {

FiniteCommRing zero_ring() {
    return FiniteCommRing("0", {"0"}, {{0}}, {{0}}, 0, 0);
}

FiniteCommRing zmod(int n) {
    if (n <= 0)
        throw InputError("zmod: modulus must be positive");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    }
    return FiniteCommRing("Z/" + std::to_string(n), std::move(names), std::move(add),
                          std::move(mul), 0, n == 1 ? 0 : 1);
}

namespace {

// coefficient tuples in base-|A| little-endian order
std::vector<int> tuple_of(int code, int k, int base) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) {
        t[i] = code % base;
        code /= base;
    }
    return t;
}

int code_of(const std::vector<int>& t, int base) {
    int c = 0;
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i)
        c = c * base + t[i];
    return c;
}

}  // namespace

FiniteCommRing trunc_poly(const FiniteCommRing& A, int k, const std::string& var,
                          int carrier_cap) {
    if (k <= 0)
        throw InputError("trunc_poly: power must be positive");
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= A.size();
        if (total > carrier_cap)
            throw CapError("trunc_poly: carrier " + std::to_string(total) + " exceeds cap " +
                           std::to_string(carrier_cap));
    }
    const int n = static_cast<int>(total), b = A.size();
    std::vector<std::string> names(n);
    for (int c = 0; c < n; ++c) {
        auto t = tuple_of(c, k, b);
        std::string s;
        for (int i = 0; i < k; ++i) {
            if (t[i] == A.zero() && !(i == 0 && s.empty() && c == 0))
                continue;
            if (!s.empty())
                s += "+";
            s += A.elem_name(t[i]);
            if (i >= 1)
                s += var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        names[c] = s.empty() ? A.elem_name(A.zero()) : s;
    }
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        auto tx = tuple_of(x, k, b);
        for (int y = 0; y < n; ++y) {
            auto ty = tuple_of(y, k, b);
            std::vector<int> ts(k), tp(k, A.zero());
            for (int i = 0; i < k; ++i)
                ts[i] = A.add(tx[i], ty[i]);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j + i < k; ++j)
                    tp[i + j] = A.add(tp[i + j], A.mul(tx[i], ty[j]));
            add[x][y] = code_of(ts, b);
            mul[x][y] = code_of(tp, b);
        }
    }
    std::vector<int> zero_t(k, A.zero()), one_t(k, A.zero());
    one_t[0] = A.one();
    return FiniteCommRing(A.name() + "[" + var + "]/(" + var + "^" + std::to_string(k) + ")",
                          std::move(names), std::move(add), std::move(mul), code_of(zero_t, b),
                          code_of(one_t, b));
}

FiniteCommRing product(const FiniteCommRing& a, const FiniteCommRing& b, int carrier_cap) {
    const long long total = static_cast<long long>(a.size()) * b.size();
    if (total > carrier_cap)
        throw CapError("product: carrier " + std::to_string(total) + " exceeds cap " +
                       std::to_string(carrier_cap));
    const int n = static_cast<int>(total), nb = b.size();
    auto enc = [nb](int x, int y) { return x * nb + y; };
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < nb; ++y) {
            names[enc(x, y)] = "(" + a.elem_name(x) + "," + b.elem_name(y) + ")";
            for (int u = 0; u < a.size(); ++u)
                for (int v = 0; v < nb; ++v) {
                    add[enc(x, y)][enc(u, v)] = enc(a.add(x, u), b.add(y, v));
                    mul[enc(x, y)][enc(u, v)] = enc(a.mul(x, u), b.mul(y, v));
                }
        }
    return FiniteCommRing(a.name() + "x" + b.name(), std::move(names), std::move(add),
                          std::move(mul), enc(a.zero(), b.zero()), enc(a.one(), b.one()));
}

FiniteCommRing power(const FiniteCommRing& a, int k, int carrier_cap) {
    if (k <= 0)
        throw InputError("power: exponent must be positive");
    FiniteCommRing r = a;
    for (int i = 1; i < k; ++i)
        r = product(r, a, carrier_cap);
    return r;
}

}  // namespace rings

}  // namespace branekit::algebra
