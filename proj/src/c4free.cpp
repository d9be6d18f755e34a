#include "kst/c4free.hpp"

#include <stdexcept>
#include <string>

namespace kst {

namespace {

// Can x join ds keeping all ordered differences distinct mod m?
bool extends_sidon(const std::vector<int>& ds, const std::vector<char>& diff_used, int x, int m) {
    // New differences are +/-(x - d) for each existing d; they must be fresh
    // and mutually distinct.
    std::vector<int> fresh;
    fresh.reserve(ds.size() * 2);
    for (int d : ds) {
        int fwd = ((x - d) % m + m) % m;
        int rev = (m - fwd) % m;
        if (fwd == 0 || rev == 0) return false;  // x already in ds
        if (fwd == rev) return false;            // (x,d) and (d,x) would collide
        if (diff_used[fwd] || diff_used[rev]) return false;
        for (int e : fresh)
            if (e == fwd || e == rev) return false;
        fresh.push_back(fwd);
        fresh.push_back(rev);
    }
    return true;
}

bool sidon_dfs(std::vector<int>& ds, std::vector<char>& diff_used, int size, int m, int start) {
    if (static_cast<int>(ds.size()) == size) return true;
    for (int x = start; x < m; ++x) {
        if (!extends_sidon(ds, diff_used, x, m)) continue;
        std::vector<int> added;
        for (int d : ds) {
            int fwd = ((x - d) % m + m) % m;
            int rev = (m - fwd) % m;
            if (!diff_used[fwd]) { diff_used[fwd] = 1; added.push_back(fwd); }
            if (!diff_used[rev]) { diff_used[rev] = 1; added.push_back(rev); }
        }
        ds.push_back(x);
        if (sidon_dfs(ds, diff_used, size, m, x + 1)) return true;
        ds.pop_back();
        for (int e : added) diff_used[e] = 0;
    }
    return false;
}

}  // namespace

std::vector<int> sidon_set(int size, int modulus) {
    if (size < 0 || modulus < 1) throw std::invalid_argument("sidon_set: size >= 0 and modulus >= 1 required");
    if (size == 0) return {};
    std::vector<int> ds;
    std::vector<char> diff_used(modulus, 0);
    if (!sidon_dfs(ds, diff_used, size, modulus, 0)) {
        throw std::runtime_error(
            "sidon_set: no Sidon set of size " + std::to_string(size) + " exists mod " +
            std::to_string(modulus) + "; feasibility is guaranteed only for modulus >= size^2+size+1 = " +
            std::to_string(static_cast<long long>(size) * size + size + 1));
    }
    return ds;
}

bool sidon_feasible(int size, int modulus) {
    if (size < 0 || modulus < 1) return false;
    if (size == 0) return true;
    std::vector<int> ds;
    std::vector<char> diff_used(modulus, 0);
    return sidon_dfs(ds, diff_used, size, modulus, 0);
}

BipartiteGraph build_p(int m, int p) {
    if (m < 1 || p < 0) throw std::invalid_argument("build_p: m >= 1 and p >= 0 required");
    std::vector<int> shifts = sidon_set(p, m);
    BipartiteGraph g(m, m);
    for (int i = 0; i < m; ++i)
        for (int d : shifts) g.add_edge(i, (i + d) % m);
    return g;
}

BipartiteGraph build_q(int m, int q) {
    if (m < 2) throw std::invalid_argument("build_q: m >= 2 required");
    BipartiteGraph p = build_p(m, q);

    // Lexicographically smallest pair of B-vertices with no common neighbor.
    int w1 = -1, w2 = -1;
    for (int b1 = 0; b1 < m && w1 == -1; ++b1)
        for (int b2 = b1 + 1; b2 < m; ++b2)
            if (!p.neighbors_of_b(b1).intersects(p.neighbors_of_b(b2))) {
                w1 = b1;
                w2 = b2;
                break;
            }
    if (w1 == -1)
        throw std::runtime_error("build_q: no two B-vertices with disjoint neighborhoods (m=" +
                                 std::to_string(m) + ", q=" + std::to_string(q) + ")");

    BipartiteGraph g(m, m - 2);
    int nb = 0;
    for (int b = 0; b < m; ++b) {
        if (b == w1 || b == w2) continue;
        p.neighbors_of_b(b).for_each([&](int a) { g.add_edge(a, nb); });
        ++nb;
    }
    return g;
}

BipartiteGraph build_r(int m, int q) {
    if (m < 1) throw std::invalid_argument("build_r: m >= 1 required");
    BipartiteGraph p = build_p(m, q);
    BipartiteGraph g(m, m - 1);
    for (int b = 1; b < m; ++b)
        p.neighbors_of_b(b).for_each([&](int a) { g.add_edge(a, b - 1); });
    return g;
}

BipartiteGraph build_gadget(const GadgetSpec& spec) {
    switch (spec.kind) {
        case GadgetKind::P: return build_p(spec.m, spec.deg);
        case GadgetKind::Q: return build_q(spec.m, spec.deg);
        case GadgetKind::R: return build_r(spec.m, spec.deg);
    }
    throw std::invalid_argument("build_gadget: unknown kind");
}

}  // namespace kst
