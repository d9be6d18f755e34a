#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kst/bigraph.hpp"
#include "kst/rational.hpp"

namespace kst {

struct ConstructionParams {
    int s, t, k;
    int n() const { return k * (s + t); }
};

enum class ConstructionCase { Even, OddMid, OddSucc };

std::string case_name(ConstructionCase c);

// A lower-bound construction together with its block labeling, so that
// certificates and tests reference blocks by name instead of re-detecting
// them. Star blocks are empty except in the OddMid case.
struct LabeledConstruction {
    BipartiteGraph graph;
    ConstructionParams params;
    ConstructionCase kind;
    VertexSet a1, a2, a_star;
    VertexSet b1, b2, b_star;
    int claimed_min_degree;
};

// Tight minimum-degree bound above which every balanced bipartite graph on
// n = k(s+t) vertices per class has a K_{s,t}-factor: n/2+s-1 for even k,
// (n+t+s)/2-1 for odd k. The builders below sit exactly one degree under it.
int threshold(int s, int t, int k);

// Even k: |A1|=|B1|=n/2+1 and |A2|=|B2|=n/2-1, complete diagonal blocks,
// Q(n/2+1, s-1) cross blocks; min degree n/2+s-2.
LabeledConstruction build_even(ConstructionParams p);
// Odd k, s+1 < t <= 2s+1: four blocks of size (n-t+s+2)/2 plus star blocks of
// size t-s-2, complete diagonals and star rows, P cross blocks, empty
// star-star block; min degree (n+t+s)/2-2.
LabeledConstruction build_odd_mid(ConstructionParams p);
// Odd k, t = s+1: |A1|=|B1|=l(s+t)+s, |A2|=|B2|=l(s+t)+s+1, complete
// diagonals, R((n+1)/2, s-1) cross blocks; min degree (n+t+s)/2-2.
LabeledConstruction build_odd_succ(ConstructionParams p);

enum class ObstructionKind { DivisibilityAfterUnmixing, CountingIntegrality };

// Machine-checkable no-factor certificate. Unmixability of the cross pairs
// (a1,b2) and (a2,b1) is verified structurally against the graph; the
// arithmetic part is either block-size divisibility or the integrality
// interval for the number of copies whose t-side touches the first block.
struct Obstruction {
    ObstructionKind kind;
    VertexSet a1, a2, a_star;
    VertexSet b1, b2, b_star;
    Rational r1_lo, r1_hi;  // CountingIntegrality only

    std::vector<std::pair<const VertexSet*, const VertexSet*>> forbidden_pairs() const {
        return {{&a1, &b2}, {&a2, &b1}};
    }
};

Obstruction obstruction_for(const LabeledConstruction& c);

// True iff the certificate validates against g: cross pairs admit no
// straddling K_{s,t} (s=1: empty cross blocks; s>=2: cross degrees <= s-1 in
// both directions and no two same-block vertices with two common neighbors
// across), the labeling partitions both classes, star blocks are small and
// mutually empty, and the divisibility / integrality arithmetic rules out
// every copy distribution. Any failed check yields false, never an error.
bool check_obstruction(const BipartiteGraph& g, const Obstruction& o, int s, int t);

}  // namespace kst
