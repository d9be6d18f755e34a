#include "kst/bigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kst {

int degree(const BipartiteGraph& g, VertexRef v) { return g.neighbors(v).count(); }

int degree_to(const BipartiteGraph& g, VertexRef v, const VertexSet& s) {
    if (s.side == v.side) throw std::invalid_argument("degree_to: set must be on the opposite side");
    return g.neighbors(v).count_and(s.members);
}

int min_degree(const BipartiteGraph& g) {
    if (g.n_a() == 0 && g.n_b() == 0) throw std::invalid_argument("min_degree: graph has no vertices");
    int m = k_infinite_degree;
    for (int a = 0; a < g.n_a(); ++a) m = std::min(m, g.neighbors_of_a(a).count());
    for (int b = 0; b < g.n_b(); ++b) m = std::min(m, g.neighbors_of_b(b).count());
    return m;
}

int min_degree_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.side == y.side) throw std::invalid_argument("min_degree_between: sets on the same side");
    int m = k_infinite_degree;
    x.members.for_each([&](int i) {
        m = std::min(m, g.neighbors({x.side, i}).count_and(y.members));
    });
    return m;
}

int max_degree_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.side == y.side) throw std::invalid_argument("max_degree_between: sets on the same side");
    int m = 0;
    x.members.for_each([&](int i) {
        m = std::max(m, g.neighbors({x.side, i}).count_and(y.members));
    });
    return m;
}

long long edges_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.side == y.side) throw std::invalid_argument("edges_between: sets on the same side");
    long long e = 0;
    x.members.for_each([&](int i) { e += g.neighbors({x.side, i}).count_and(y.members); });
    return e;
}

Rational density(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    long long nx = x.size(), ny = y.size();
    if (nx == 0 || ny == 0) throw std::invalid_argument("density: empty side");
    return {edges_between(g, x, y), nx * ny};
}

VertexSet common_neighbors(const BipartiteGraph& g, VertexRef u, VertexRef v) {
    if (u.side != v.side) throw std::invalid_argument("common_neighbors: vertices on different sides");
    if (u.index == v.index) throw std::invalid_argument("common_neighbors: identical vertices");
    VertexSet out{opposite(u.side), g.neighbors(u) & g.neighbors(v)};
    return out;
}

bool is_k22_free(const BipartiteGraph& g) {
    // Two A-vertices with two common B-neighbors <=> a K_{2,2} <=> the
    // symmetric condition on B, so scanning A-pairs decides both.
    for (int a = 0; a < g.n_a(); ++a)
        for (int a2 = a + 1; a2 < g.n_a(); ++a2)
            if (g.neighbors_of_a(a).count_and(g.neighbors_of_a(a2)) >= 2) return false;
    return true;
}

InducedSubgraph induced(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    if (x.side != Side::A || y.side != Side::B)
        throw std::invalid_argument("induced: x must be an A-set and y a B-set");
    std::vector<int> a_map = x.indices();
    std::vector<int> b_map = y.indices();
    std::vector<int> b_inv(g.n_b(), -1);
    for (std::size_t j = 0; j < b_map.size(); ++j) b_inv[b_map[j]] = static_cast<int>(j);

    BipartiteGraph sub(static_cast<int>(a_map.size()), static_cast<int>(b_map.size()));
    for (std::size_t i = 0; i < a_map.size(); ++i) {
        Bitset nb = g.neighbors_of_a(a_map[i]) & y.members;
        nb.for_each([&](int b) { sub.add_edge(static_cast<int>(i), b_inv[b]); });
    }
    return {std::move(sub), std::move(a_map), std::move(b_map)};
}

}  // namespace kst
