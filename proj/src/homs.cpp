#include "branekit/algebra/homs.hpp"

#include <algorithm>

namespace branekit::algebra {

std::string RingHom::describe() const {
    std::string s = source.name() + "->" + target.name() + " {";
    for (int a = 0; a < source.size(); ++a) {
        if (a)
            s += ", ";
        s += source.elem_name(a) + ":" + target.elem_name(map[a]);
    }
    return s + "}";
}

bool is_ring_hom(const RingHom& h) {
    const auto& B = h.source;
    const auto& C = h.target;
    if (static_cast<int>(h.map.size()) != B.size())
        return false;
    if (h.map[B.one()] != C.one())
        return false;
    for (int a = 0; a < B.size(); ++a)
        for (int b = 0; b < B.size(); ++b) {
            if (h.map[B.add(a, b)] != C.add(h.map[a], h.map[b]))
                return false;
            if (h.map[B.mul(a, b)] != C.mul(h.map[a], h.map[b]))
                return false;
        }
    return true;
}

RingHom identity_hom(const FiniteCommRing& R) {
    std::vector<int> m(R.size());
    for (int a = 0; a < R.size(); ++a)
        m[a] = a;
    return {R, R, std::move(m)};
}

RingHom compose(const RingHom& g, const RingHom& f) {
    if (!f.target.same_tables(g.source))
        throw InputError("compose: hom targets/sources disagree");
    std::vector<int> m(f.source.size());
    for (int a = 0; a < f.source.size(); ++a)
        m[a] = g.map[f.map[a]];
    return {f.source, g.target, std::move(m)};
}

bool is_iso(const RingHom& h) {
    if (h.source.size() != h.target.size())
        return false;
    std::vector<char> hit(h.map.size(), 0);
    for (int v : h.map) {
        if (hit[v])
            return false;
        hit[v] = 1;
    }
    return true;
}

RingHom inverse(const RingHom& h) {
    if (!is_iso(h))
        throw InputError("inverse: hom is not bijective");
    std::vector<int> m(h.map.size());
    for (int a = 0; a < static_cast<int>(h.map.size()); ++a)
        m[h.map[a]] = a;
    return {h.target, h.source, std::move(m)};
}

namespace {

struct HomSearch {
    const FiniteCommRing& B;
    const FiniteCommRing& C;
    long budget;
    std::vector<std::vector<int>> found;

    /* Close img under + and * on all assigned pairs; false on conflict.
     * dirty holds elements whose image was just assigned. */
    bool propagate(std::vector<int>& img, std::vector<int> dirty) {
        while (!dirty.empty()) {
            int x = dirty.back();
            dirty.pop_back();
            for (int y = 0; y < B.size(); ++y) {
                if (img[y] < 0)
                    continue;
                const int pairs[2][2] = {{B.add(x, y), C.add(img[x], img[y])},
                                         {B.mul(x, y), C.mul(img[x], img[y])}};
                for (const auto& p : pairs) {
                    if (img[p[0]] < 0) {
                        img[p[0]] = p[1];
                        dirty.push_back(p[0]);
                    } else if (img[p[0]] != p[1]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void search(std::vector<int>& img) {
        if (--budget < 0)
            throw CapError("enumerate_homs: search budget exceeded");
        int next = -1;
        for (int a = 0; a < B.size(); ++a)
            if (img[a] < 0) {
                next = a;
                break;
            }
        if (next < 0) {
            found.push_back(img);
            return;
        }
        for (int c = 0; c < C.size(); ++c) {
            std::vector<int> trial = img;
            trial[next] = c;
            if (propagate(trial, {next}))
                search(trial);
        }
    }
};

}  // namespace

std::vector<RingHom> enumerate_homs(const FiniteCommRing& B, const FiniteCommRing& C,
                                    const Caps& caps) {
    if (B.size() > caps.carrier_cap || C.size() > caps.carrier_cap)
        throw CapError("enumerate_homs: carrier exceeds cap");
    HomSearch s{B, C, caps.map_search_nodes, {}};
    std::vector<int> img(B.size(), -1);
    img[B.zero()] = C.zero();
    img[B.one()] = C.one();
    if (s.propagate(img, {B.zero(), B.one()}))
        s.search(img);
    std::sort(s.found.begin(), s.found.end());
    std::vector<RingHom> out;
    out.reserve(s.found.size());
    for (auto& m : s.found) {
        RingHom h{B, C, std::move(m)};
        if (!is_ring_hom(h))
            throw InputError("enumerate_homs: propagation emitted a non-hom");
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace branekit::algebra
