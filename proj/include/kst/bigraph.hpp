#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "kst/bitset.hpp"
#include "kst/rational.hpp"

namespace kst {

enum class Side : std::uint8_t { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char side_char(Side s) { return s == Side::A ? 'A' : 'B'; }

struct VertexRef {
    Side side;
    int index;
    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// An index set within one vertex class.
struct VertexSet {
    Side side;
    Bitset members;

    static VertexSet empty(Side s, int class_size) { return {s, Bitset(class_size)}; }
    static VertexSet full(Side s, int class_size) { return {s, Bitset::full(class_size)}; }
    static VertexSet of(Side s, int class_size, const std::vector<int>& idx) {
        VertexSet v = empty(s, class_size);
        for (int i : idx) v.members.set(i);
        return v;
    }
    // Contiguous index range [lo, hi).
    static VertexSet range(Side s, int class_size, int lo, int hi) {
        VertexSet v = empty(s, class_size);
        for (int i = lo; i < hi; ++i) v.members.set(i);
        return v;
    }

    int size() const { return members.count(); }
    bool contains(int i) const { return members.test(i); }
    void add(int i) { members.set(i); }
    void remove(int i) { members.reset(i); }
    std::vector<int> indices() const { return members.to_indices(); }
};

// Balanced or unbalanced bipartite graph with bitset adjacency kept in both
// directions. Immutable once built (all queries are const); safe to share
// across threads.
class BipartiteGraph {
public:
    BipartiteGraph(int n_a, int n_b)
        : n_a_(n_a), n_b_(n_b), adj_a_(n_a, Bitset(n_b)), adj_b_(n_b, Bitset(n_a)) {}

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int class_size(Side s) const { return s == Side::A ? n_a_ : n_b_; }

    void add_edge(int a, int b) {
        check_a(a);
        check_b(b);
        if (!adj_a_[a].test(b)) {
            adj_a_[a].set(b);
            adj_b_[b].set(a);
            ++edges_;
        }
    }
    bool has_edge(int a, int b) const {
        check_a(a);
        check_b(b);
        return adj_a_[a].test(b);
    }

    const Bitset& neighbors_of_a(int a) const {
        check_a(a);
        return adj_a_[a];
    }
    const Bitset& neighbors_of_b(int b) const {
        check_b(b);
        return adj_b_[b];
    }
    const Bitset& neighbors(VertexRef v) const {
        return v.side == Side::A ? neighbors_of_a(v.index) : neighbors_of_b(v.index);
    }

    long long edge_count() const { return edges_; }

private:
    void check_a(int a) const {
        if (a < 0 || a >= n_a_) throw std::invalid_argument("invalid A-vertex index " + std::to_string(a));
    }
    void check_b(int b) const {
        if (b < 0 || b >= n_b_) throw std::invalid_argument("invalid B-vertex index " + std::to_string(b));
    }

    int n_a_, n_b_;
    std::vector<Bitset> adj_a_, adj_b_;
    long long edges_ = 0;
};

/// Sentinel returned by min_degree_between on an empty source set.
inline constexpr int k_infinite_degree = std::numeric_limits<int>::max();

int degree(const BipartiteGraph& g, VertexRef v);
// |N(v) ∩ s|; s must lie on the opposite side of v.
int degree_to(const BipartiteGraph& g, VertexRef v, const VertexSet& s);
// Minimum over all vertices of both classes; errors on a vertexless graph.
int min_degree(const BipartiteGraph& g);
// min over v in x of degree_to(v, y); k_infinite_degree when x is empty.
int min_degree_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);
// max analogue; 0 when x is empty.
int max_degree_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);
long long edges_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);
// e(x,y) / (|x||y|) as an exact rational; both sets must be nonempty.
Rational density(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);
// u, v on the same side, u != v; result lives on the opposite side.
VertexSet common_neighbors(const BipartiteGraph& g, VertexRef u, VertexRef v);
// True iff no two same-side vertices share two common neighbors.
bool is_k22_free(const BipartiteGraph& g);

struct InducedSubgraph {
    BipartiteGraph graph;
    std::vector<int> a_map;  // new A index -> index in the parent graph
    std::vector<int> b_map;
};
InducedSubgraph induced(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);

}  // namespace kst
