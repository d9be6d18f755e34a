#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kst/bigraph.hpp"
#include "kst/solver.hpp"

namespace kst {

struct TilerConfig {
    double alpha = 0.01;     // classification parameter, 0 < alpha < 1
    int fallback_n_cap = 24; // max n for the exact-solver fallback
};

// Six-set labeling of the two classes around a sparse base pair, plus the
// alpha that produced it. a0/b0 hold the special vertices.
struct ExtremalLabeling {
    VertexSet a1, a2, a0;
    VertexSet b1, b2, b0;
    double alpha;
    VertexSet base_a1, base_b1;
};

// K_{1,h} with the center on one side and h leaves on the other.
struct Star {
    VertexRef center;
    VertexSet leaves;
};

// Threshold classification by degree into the base pair: degree below
// ceil(alpha^(1/3) * n/2) goes to the 1-side, above floor((1-alpha^(1/3)) *
// n/2) to the 2-side, the rest are special. Pure classification; apply
// repair_labeling to enforce the sparse-pair degree bounds.
ExtremalLabeling classify(const BipartiteGraph& g, const VertexSet& base_a1,
                          const VertexSet& base_b1, const TilerConfig& cfg);

// Greedily move highest-offending vertices of a1/b1 (and a2/b2) into the
// special sets until both sparse pairs satisfy max degree < alpha^(1/9) * n.
ExtremalLabeling repair_labeling(const BipartiteGraph& g, ExtremalLabeling lab);

// Vertex-disjoint h-star families: at least 2*(delta - h + 1) stars centered
// in u1 and as many centered in u2, all inside u1 u u2, where delta =
// min degree from u1 into u2. Verifies the hypotheses (h <= delta and an
// admissible c < 1/(6h+7) with delta, max degree from u2 into u1, and the
// size spread all <= c*M) exactly in rational arithmetic; errors when they
// fail, and a greedy stall under verified hypotheses is reported as a bug.
std::pair<std::vector<Star>, std::vector<Star>> find_stars(int h, const VertexSet& u1,
                                                           const VertexSet& u2,
                                                           const BipartiteGraph& g);

// Complete a near-complete pair G[x,y] to an exact cover of x u y extending
// pre_placed, with exactly quota_ts_in_x copies (pre_placed included) whose
// t-side lies in x. Low-degree (special) vertices are embedded first; the
// rest is filled lowest-index-first. Errors when the quota is infeasible or
// the greedy sticks; callers fall back to the exact solver.
std::vector<KstCopy> tile_dense_pair(const BipartiteGraph& g, const VertexSet& x,
                                     const VertexSet& y, int s, int t, int quota_ts_in_x,
                                     std::vector<KstCopy> pre_placed);

// The even-k tiling: balance the four sets to n/2 via star relocation and
// special distribution, then tile both dense pairs.
Factor tile_even(const BipartiteGraph& g, const ExtremalLabeling& lab, int s, int t);

// The odd-k tiling: bring (|a1|, |b1|) to one of the two valid size targets
// via star relocation and special distribution, then tile both (unbalanced)
// dense pairs.
Factor tile_odd(const BipartiteGraph& g, const ExtremalLabeling& lab, int s, int t);

enum class TileStatus { Found, NoFactor, Unknown };
enum class TileRoute { Extremal, Fallback, Precheck };

struct TileResult {
    TileStatus status;
    Factor factor;  // populated when status == Found
    TileRoute route;
    std::string note;
};

// Orchestrator: search for a sparse base pair, classify, repair, dispatch on
// the parity of k; on any error fall back to the exact solver when n is
// within cfg.fallback_n_cap, else Unknown. Found always verifies.
TileResult tile(const BipartiteGraph& g, int s, int t, const TilerConfig& cfg = {});

}  // namespace kst
