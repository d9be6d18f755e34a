#pragma once

#include <vector>

#include "kst/bigraph.hpp"

namespace kst {

// Constructive C4-free regular-ish bipartite gadgets, realized as circulant
// shift-matchings over a Sidon set of residues.

enum class GadgetKind { P, Q, R };

struct GadgetSpec {
    GadgetKind kind;
    int m;    // class-size parameter
    int deg;  // regularity parameter (p or q)
};

// A set D of `size` residues mod `modulus` whose ordered pairwise differences
// d_i - d_j (i != j) are all distinct mod modulus. Deterministic: smallest
// valid element first (backtracking only where pure greedy would stall, which
// never happens at or above the guaranteed bound). Errors when no such set
// exists, naming the bound modulus >= size^2 + size + 1 that guarantees one.
std::vector<int> sidon_set(int size, int modulus);

// True iff a Sidon set of the given size exists mod modulus.
bool sidon_feasible(int size, int modulus);

// P(m,p): classes of size m each; edges {(i, (i+d) mod m) : d in D}.
// p-regular on both sides and K_{2,2}-free.
BipartiteGraph build_p(int m, int p);

// Q(m,q): build_p(m,q) with two B-vertices sharing no common neighbor
// deleted (lexicographically smallest such pair). Classes m and m-2;
// A-degrees in {q-1, q}, B-degrees exactly q.
BipartiteGraph build_q(int m, int q);

// R(m,q): build_p(m,q) with the lowest-index B-vertex deleted.
// Classes m and m-1; A-degrees in {q-1, q}, B-degrees exactly q.
BipartiteGraph build_r(int m, int q);

BipartiteGraph build_gadget(const GadgetSpec& spec);

}  // namespace kst
