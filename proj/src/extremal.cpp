#include "kst/extremal.hpp"

#include <stdexcept>

#include "kst/c4free.hpp"

namespace kst {

namespace {

void check_params(const ConstructionParams& p) {
    if (p.s < 1 || p.t <= p.s || p.k < 1)
        throw std::invalid_argument("construction: need 1 <= s < t and k >= 1");
}

void add_complete(BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
    x.members.for_each([&](int a) { y.members.for_each([&](int b) { g.add_edge(a, b); }); });
}

// Overlay `src` onto g, mapping src's A-class onto x and B-class onto y
// (both in ascending index order).
void add_copy(BipartiteGraph& g, const BipartiteGraph& src, const VertexSet& x, const VertexSet& y) {
    std::vector<int> xs = x.indices(), ys = y.indices();
    if (static_cast<int>(xs.size()) != src.n_a() || static_cast<int>(ys.size()) != src.n_b())
        throw std::logic_error("add_copy: size mismatch");
    for (int i = 0; i < src.n_a(); ++i)
        src.neighbors_of_a(i).for_each([&](int j) {
            if (x.side == Side::A)
                g.add_edge(xs[i], ys[j]);
            else
                g.add_edge(ys[j], xs[i]);
        });
}

int verified_min_degree(const BipartiteGraph& g, int formula, const char* what) {
    int scanned = min_degree(g);
    if (scanned != formula)
        throw std::logic_error(std::string(what) + ": minimum degree " + std::to_string(scanned) +
                               " does not match the formula value " + std::to_string(formula));
    return formula;
}

}  // namespace

std::string case_name(ConstructionCase c) {
    switch (c) {
        case ConstructionCase::Even: return "even";
        case ConstructionCase::OddMid: return "odd-mid";
        case ConstructionCase::OddSucc: return "odd-succ";
    }
    return "?";
}

int threshold(int s, int t, int k) {
    int n = k * (s + t);
    if (k % 2 == 0) return n / 2 + s - 1;
    return (n + t + s) / 2 - 1;
}

LabeledConstruction build_even(ConstructionParams p) {
    check_params(p);
    if (p.k % 2 != 0) throw std::invalid_argument("build_even: k must be even");
    int n = p.n();
    int m = n / 2 + 1;

    VertexSet a1 = VertexSet::range(Side::A, n, 0, m);
    VertexSet a2 = VertexSet::range(Side::A, n, m, n);
    VertexSet b1 = VertexSet::range(Side::B, n, 0, m);
    VertexSet b2 = VertexSet::range(Side::B, n, m, n);

    BipartiteGraph q = build_q(m, p.s - 1);
    BipartiteGraph g(n, n);
    add_complete(g, a1, b1);
    add_complete(g, a2, b2);
    add_copy(g, q, a1, b2);  // Q1 = A1, Q2 = B2
    add_copy(g, q, b1, a2);  // Q1 = B1, Q2 = A2

    int delta = verified_min_degree(g, n / 2 + p.s - 2, "build_even");
    return {std::move(g), p, ConstructionCase::Even,
            a1, a2, VertexSet::empty(Side::A, n),
            b1, b2, VertexSet::empty(Side::B, n), delta};
}

LabeledConstruction build_odd_mid(ConstructionParams p) {
    check_params(p);
    if (p.k % 2 == 0) throw std::invalid_argument("build_odd_mid: k must be odd");
    if (!(p.t > p.s + 1 && p.t <= 2 * p.s + 1))
        throw std::invalid_argument("build_odd_mid: need s+1 < t <= 2s+1");
    int n = p.n();
    int m = (n - p.t + p.s + 2) / 2;
    int w = p.t - p.s - 2;

    VertexSet a1 = VertexSet::range(Side::A, n, 0, m);
    VertexSet a2 = VertexSet::range(Side::A, n, m, 2 * m);
    VertexSet as = VertexSet::range(Side::A, n, 2 * m, n);
    VertexSet b1 = VertexSet::range(Side::B, n, 0, m);
    VertexSet b2 = VertexSet::range(Side::B, n, m, 2 * m);
    VertexSet bs = VertexSet::range(Side::B, n, 2 * m, n);
    if (as.size() != w) throw std::logic_error("build_odd_mid: block arithmetic");

    BipartiteGraph pg = build_p(m, p.s - 1);
    BipartiteGraph g(n, n);
    add_complete(g, a1, b1);
    add_complete(g, a2, b2);
    add_complete(g, as, b1);
    add_complete(g, as, b2);
    add_complete(g, a1, bs);
    add_complete(g, a2, bs);
    add_copy(g, pg, a1, b2);
    add_copy(g, pg, a2, b1);
    // G[A_*, B_*] stays empty.

    int delta = verified_min_degree(g, (n + p.t + p.s) / 2 - 2, "build_odd_mid");
    return {std::move(g), p, ConstructionCase::OddMid, a1, a2, as, b1, b2, bs, delta};
}

LabeledConstruction build_odd_succ(ConstructionParams p) {
    check_params(p);
    if (p.k % 2 == 0) throw std::invalid_argument("build_odd_succ: k must be odd");
    if (p.t != p.s + 1) throw std::invalid_argument("build_odd_succ: need t = s+1");
    int n = p.n();
    int l = (p.k - 1) / 2;
    int small = l * (p.s + p.t) + p.s;  // |A1| = |B1|
    int m = (n + 1) / 2;                // R gadget's larger class = |A2| = |B2|

    VertexSet a1 = VertexSet::range(Side::A, n, 0, small);
    VertexSet a2 = VertexSet::range(Side::A, n, small, n);
    VertexSet b1 = VertexSet::range(Side::B, n, 0, small);
    VertexSet b2 = VertexSet::range(Side::B, n, small, n);

    BipartiteGraph r = build_r(m, p.s - 1);
    BipartiteGraph g(n, n);
    add_complete(g, a1, b1);
    add_complete(g, a2, b2);
    add_copy(g, r, b2, a1);  // R1 = B2, R2 = A1
    add_copy(g, r, a2, b1);  // R1 = A2, R2 = B1

    int delta = verified_min_degree(g, (n + p.t + p.s) / 2 - 2, "build_odd_succ");
    return {std::move(g), p, ConstructionCase::OddSucc,
            a1, a2, VertexSet::empty(Side::A, n),
            b1, b2, VertexSet::empty(Side::B, n), delta};
}

Obstruction obstruction_for(const LabeledConstruction& c) {
    Obstruction o{c.kind == ConstructionCase::OddMid ? ObstructionKind::CountingIntegrality
                                                     : ObstructionKind::DivisibilityAfterUnmixing,
                  c.a1, c.a2, c.a_star, c.b1, c.b2, c.b_star, Rational(0), Rational(0)};
    if (o.kind == ObstructionKind::CountingIntegrality) {
        long long st = c.params.s + c.params.t;
        long long m = c.a1.size();
        long long w = c.a_star.size();
        o.r1_lo = Rational(m, st);
        o.r1_hi = Rational(m + w, st);
    }
    return o;
}

namespace {

// Sound structural no-straddle check for one cross pair (X, Y):
//   s = 1: the block must be empty;
//   s >= 2: deg(x, Y) <= s-1 and deg(y, X) <= s-1 for all x in X, y in Y,
//           and no two X-vertices share two common neighbors inside Y.
bool pair_unmixable(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y, int s) {
    if (s == 1) return edges_between(g, x, y) == 0;
    if (max_degree_between(g, x, y) > s - 1) return false;
    if (max_degree_between(g, y, x) > s - 1) return false;
    std::vector<int> xs = x.indices();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            Bitset common = g.neighbors({x.side, xs[i]}) & g.neighbors({x.side, xs[j]});
            if (common.count_and(y.members) >= 2) return false;
        }
    return true;
}

bool partitions_class(const VertexSet& p1, const VertexSet& p2, const VertexSet& p3, int n) {
    if (p1.size() + p2.size() + p3.size() != n) return false;
    if (p1.members.intersects(p2.members) || p1.members.intersects(p3.members) ||
        p2.members.intersects(p3.members))
        return false;
    return (p1.members | p2.members | p3.members) == Bitset::full(n);
}

}  // namespace

bool check_obstruction(const BipartiteGraph& g, const Obstruction& o, int s, int t) {
    if (s < 1 || t <= s) return false;
    if (g.n_a() != g.n_b()) return false;
    int n = g.n_a();
    if (!partitions_class(o.a1, o.a2, o.a_star, n)) return false;
    if (!partitions_class(o.b1, o.b2, o.b_star, n)) return false;

    for (auto [x, y] : o.forbidden_pairs())
        if (!pair_unmixable(g, *x, *y, s)) return false;

    if (o.kind == ObstructionKind::DivisibilityAfterUnmixing) {
        if (o.a_star.size() != 0 || o.b_star.size() != 0) return false;
        // Every copy lies inside A1 u B1 or inside A2 u B2, so both block
        // sums must be divisible by s+t.
        return (o.a1.size() + o.b1.size()) % (s + t) != 0;
    }

    // CountingIntegrality: star blocks too small to host a color class, no
    // edges between them, and the copy-count interval contains no integer.
    long long wa = o.a_star.size(), wb = o.b_star.size();
    if (wa >= s || wb >= s) return false;
    if (wa > t - s - 1 || wb > t - s - 1) return false;
    if (edges_between(g, o.a_star, o.b_star) != 0) return false;
    // With r1 = r2 forced, (s+t) * r1 = |A_c| in [|A1|, |A1|+|A_*|] and also
    // = |B_c| in [|B1|, |B1|+|B_*|].
    long long a1 = o.a1.size(), b1 = o.b1.size();
    if (a1 + wa - b1 >= t - s || b1 + wb - a1 >= t - s) return false;
    Rational lo(std::max(a1, b1), s + t);
    Rational hi(std::min(a1 + wa, b1 + wb), s + t);
    if (o.r1_lo != lo || o.r1_hi != hi) return false;
    return hi.floor() < lo.ceil();  // no integer in [lo, hi]
}

}  // namespace kst
