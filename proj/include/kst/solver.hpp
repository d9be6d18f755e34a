#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kst/bigraph.hpp"

namespace kst {

// Which class holds the copy's color class of size t.
enum class Orientation : std::uint8_t { TSideInA, TSideInB };

// One placed copy of K_{s,t}: the s-side and t-side index sets live on
// opposite classes per the orientation, and every cross pair is an edge.
struct KstCopy {
    Orientation orientation;
    std::vector<int> s_side;
    std::vector<int> t_side;

    const std::vector<int>& part_in_a() const {
        return orientation == Orientation::TSideInA ? t_side : s_side;
    }
    const std::vector<int>& part_in_b() const {
        return orientation == Orientation::TSideInA ? s_side : t_side;
    }
    friend bool operator==(const KstCopy&, const KstCopy&) = default;
};

// Vertex-disjoint copies covering every vertex of both classes.
struct Factor {
    std::vector<KstCopy> copies;
};

struct SearchBudget {
    std::uint64_t node_limit = 0;  // 0 = unlimited
    double time_limit_secs = 0;    // 0 = unlimited
    static SearchBudget unlimited() { return {}; }
    static SearchBudget nodes(std::uint64_t n) { return {n, 0}; }
};

enum class SearchStatus { Found, NoFactor, BudgetExceeded };

struct SearchResult {
    SearchStatus status;
    Factor factor;               // populated when status == Found
    std::uint64_t nodes = 0;     // backtracking nodes visited
};

// All K_{s,t} copies containing v, disjoint from avoid_a/avoid_b, both
// orientations, in canonical order, without duplicates.
std::vector<KstCopy> copies_covering(const BipartiteGraph& g, int s, int t, VertexRef v,
                                     const VertexSet& avoid_a, const VertexSet& avoid_b);

// Exact decision by canonical backtracking (always branch on the lowest
// uncovered vertex, A-class first). Found implies verify_factor passes.
// Budget exhaustion is a value, never an error.
SearchResult has_factor(const BipartiteGraph& g, int s, int t,
                        const SearchBudget& budget = SearchBudget::unlimited());

bool verify_factor(const BipartiteGraph& g, int s, int t, const Factor& f);

// Independent oracle: exhaustive enumeration with no pruning beyond edge
// checks (plus result caching). Hard cap: n_a + n_b <= 24.
SearchResult brute_force_has_factor(const BipartiteGraph& g, int s, int t);

// Split a K_{s+t,s+t}-factor into a K_{s,t}-factor: each big copy (X, Y)
// yields (s from X, t from Y) and (remaining t from X, s from Y).
Factor split_stst(const BipartiteGraph& g, int s, int t, const Factor& big);

}  // namespace kst
