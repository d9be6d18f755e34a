#include "kst/tiler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "kst/extremal.hpp"
#include "kst/rational.hpp"

namespace kst {

namespace {

// Integer cut for "d < bound" / "d >= bound" predicates against a real bound:
// for integer d, d < bound <=> d < ceil(bound) and d >= bound <=> d >= ceil(bound).
int ceil_cut(long double bound) { return static_cast<int>(ceill(bound)); }
int floor_cut(long double bound) { return static_cast<int>(floorl(bound)); }

}  // namespace

ExtremalLabeling classify(const BipartiteGraph& g, const VertexSet& base_a1,
                          const VertexSet& base_b1, const TilerConfig& cfg) {
    if (g.n_a() != g.n_b()) throw std::invalid_argument("classify: classes must be balanced");
    int n = g.n_a();
    if (base_a1.side != Side::A || base_b1.side != Side::B)
        throw std::invalid_argument("classify: base pair must be (A-set, B-set)");
    if (base_a1.size() != n / 2 || base_b1.size() != n / 2)
        throw std::invalid_argument("classify: base sets must have size floor(n/2)");
    if (!(cfg.alpha > 0 && cfg.alpha < 1)) throw std::invalid_argument("classify: need 0 < alpha < 1");

    long double root = cbrtl(static_cast<long double>(cfg.alpha));
    int lo_cut = ceil_cut(root * n / 2);               // d < alpha^(1/3) n/2  <=>  d < lo_cut
    int hi_cut = floor_cut((1 - root) * n / 2);        // d > (1-alpha^(1/3)) n/2  <=>  d > hi_cut

    ExtremalLabeling lab{VertexSet::empty(Side::A, n), VertexSet::empty(Side::A, n),
                         VertexSet::empty(Side::A, n), VertexSet::empty(Side::B, n),
                         VertexSet::empty(Side::B, n), VertexSet::empty(Side::B, n),
                         cfg.alpha, base_a1, base_b1};
    for (int a = 0; a < n; ++a) {
        int d = g.neighbors_of_a(a).count_and(base_b1.members);
        if (d < lo_cut)
            lab.a1.add(a);
        else if (d > hi_cut)
            lab.a2.add(a);
        else
            lab.a0.add(a);
    }
    for (int b = 0; b < n; ++b) {
        int d = g.neighbors_of_b(b).count_and(base_a1.members);
        if (d < lo_cut)
            lab.b1.add(b);
        else if (d > hi_cut)
            lab.b2.add(b);
        else
            lab.b0.add(b);
    }
    return lab;
}

ExtremalLabeling repair_labeling(const BipartiteGraph& g, ExtremalLabeling lab) {
    int n = g.n_a();
    int cap = ceil_cut(powl(static_cast<long double>(lab.alpha), 1.0L / 9) * n);

    while (true) {
        // Worst offender across the four sparse-pair roles, highest degree
        // first; ties resolved a1, a2, b1, b2 then lowest index.
        int best_deg = cap - 1;
        int which = -1, index = -1;
        auto consider = [&](int group, const VertexSet& from, const VertexSet& into, Side side) {
            from.members.for_each([&](int i) {
                int d = g.neighbors({side, i}).count_and(into.members);
                if (d > best_deg) {
                    best_deg = d;
                    which = group;
                    index = i;
                }
            });
        };
        consider(0, lab.a1, lab.b1, Side::A);
        consider(1, lab.a2, lab.b2, Side::A);
        consider(2, lab.b1, lab.a1, Side::B);
        consider(3, lab.b2, lab.a2, Side::B);
        if (which == -1) break;
        switch (which) {
            case 0: lab.a1.remove(index); lab.a0.add(index); break;
            case 1: lab.a2.remove(index); lab.a0.add(index); break;
            case 2: lab.b1.remove(index); lab.b0.add(index); break;
            case 3: lab.b2.remove(index); lab.b0.add(index); break;
        }
    }
    return lab;
}

std::pair<std::vector<Star>, std::vector<Star>> find_stars(int h, const VertexSet& u1,
                                                           const VertexSet& u2,
                                                           const BipartiteGraph& g) {
    if (h < 1) throw std::invalid_argument("find_stars: h >= 1 required");
    if (u1.side == u2.side) throw std::invalid_argument("find_stars: sets on the same side");
    int size1 = u1.size(), size2 = u2.size();
    if (size1 == 0 || size2 == 0) throw std::invalid_argument("find_stars: empty set");

    int delta = min_degree_between(g, u1, u2);
    int big_delta = max_degree_between(g, u2, u1);
    if (h > delta)
        throw std::runtime_error("find_stars: h = " + std::to_string(h) +
                                 " exceeds delta(U1,U2) = " + std::to_string(delta));

    // Best admissible c: minimize max(K, |U1|-M, |U2|-M) / M over M, where
    // K = max(delta, Delta). The minimum sits at M* = max((|U1|+|U2|)/2,
    // min|Ui| + K); the hypotheses hold iff that ratio is < 1/(6h+7).
    long long k_stat = std::max(delta, big_delta);
    long long lo = std::min(size1, size2), hi = std::max(size1, size2);
    Rational m_star = std::max(Rational(size1 + size2, 2), Rational(lo) + Rational(k_stat));
    Rational worst = std::max({Rational(k_stat), Rational(hi) - m_star, m_star - Rational(lo)});
    if (!(worst * Rational(6 * h + 7) < m_star))
        throw std::runtime_error("find_stars: no admissible c < 1/(6h+7) for sizes " +
                                 std::to_string(size1) + "," + std::to_string(size2) +
                                 " with delta=" + std::to_string(delta) +
                                 " Delta=" + std::to_string(big_delta));

    int target = 2 * (delta - h + 1);
    Bitset alive1 = u1.members, alive2 = u2.members;

    auto grab = [&](Side center_side, Bitset& centers_alive, Bitset& leaves_alive) {
        std::vector<Star> stars;
        Side leaf_side = opposite(center_side);
        for (int made = 0; made < target; ++made) {
            int best = -1, best_deg = 0;
            for (int v = centers_alive.find_first(); v != -1; v = centers_alive.find_next(v)) {
                int d = g.neighbors({center_side, v}).count_and(leaves_alive);
                if (d >= h && (best == -1 || d < best_deg)) {
                    best = v;
                    best_deg = d;
                }
            }
            if (best == -1)
                throw std::logic_error("find_stars: greedy stalled despite verified hypotheses");
            // Leaves with the least remaining degree on the center side lose
            // the fewest options for later stars.
            Bitset nb = g.neighbors({center_side, best}) & leaves_alive;
            std::vector<std::pair<int, int>> cand;
            nb.for_each([&](int w) {
                cand.emplace_back(g.neighbors({leaf_side, w}).count_and(centers_alive), w);
            });
            std::sort(cand.begin(), cand.end());
            VertexSet leaves = VertexSet::empty(leaf_side, g.class_size(leaf_side));
            for (int i = 0; i < h; ++i) leaves.add(cand[i].second);

            centers_alive.reset(best);
            for (int i = 0; i < h; ++i) leaves_alive.reset(cand[i].second);
            stars.push_back(Star{{center_side, best}, leaves});
        }
        return stars;
    };

    std::vector<Star> first = grab(u1.side, alive1, alive2);
    std::vector<Star> second = grab(u2.side, alive2, alive1);
    return {std::move(first), std::move(second)};
}

namespace {

struct PairCounts {
    int p;  // copies with t-side in x
    int q;  // copies with t-side in y
};

// Exact copy counts covering rx vertices of x and ry of y; error when the
// linear system has no nonnegative integer solution.
PairCounts solve_pair_counts(int s, int t, long long rx, long long ry) {
    long long denom = static_cast<long long>(t) * t - static_cast<long long>(s) * s;
    long long pn = t * rx - s * ry, qn = t * ry - s * rx;
    if (pn < 0 || qn < 0 || pn % denom != 0 || qn % denom != 0)
        throw std::runtime_error("dense pair: sizes " + std::to_string(rx) + "+" +
                                 std::to_string(ry) + " admit no K_{s,t} cover");
    return {static_cast<int>(pn / denom), static_cast<int>(qn / denom)};
}

}  // namespace

std::vector<KstCopy> tile_dense_pair(const BipartiteGraph& g, const VertexSet& x,
                                     const VertexSet& y, int s, int t, int quota_ts_in_x,
                                     std::vector<KstCopy> pre_placed) {
    if (s < 1 || t <= s) throw std::invalid_argument("tile_dense_pair: need 1 <= s < t");
    if (x.side != Side::A || y.side != Side::B)
        throw std::invalid_argument("tile_dense_pair: pair must be (A-set, B-set)");

    Bitset cov_x(g.n_a()), cov_y(g.n_b());
    int pre_tx = 0;
    for (const KstCopy& c : pre_placed) {
        for (int a : c.part_in_a()) {
            if (!x.contains(a) || cov_x.test(a))
                throw std::invalid_argument("tile_dense_pair: pre-placed copy outside pair or overlapping");
            cov_x.set(a);
        }
        for (int b : c.part_in_b()) {
            if (!y.contains(b) || cov_y.test(b))
                throw std::invalid_argument("tile_dense_pair: pre-placed copy outside pair or overlapping");
            cov_y.set(b);
        }
        if (c.orientation == Orientation::TSideInA) ++pre_tx;
    }

    long long rx = x.size() - cov_x.count(), ry = y.size() - cov_y.count();
    PairCounts counts = solve_pair_counts(s, t, rx, ry);
    int p = counts.p, q = counts.q;
    if (quota_ts_in_x - pre_tx != p)
        throw std::runtime_error("tile_dense_pair: orientation quota " + std::to_string(quota_ts_in_x) +
                                 " infeasible (needs " + std::to_string(p + pre_tx) + ")");

    Bitset unc_x = x.members.andnot(cov_x);
    Bitset unc_y = y.members.andnot(cov_y);

    // The denseness contract separates vertex degrees into "near-complete"
    // and "special"; half the smaller side splits the two regimes.
    int cut = std::min(x.size(), y.size()) / 2;
    Bitset special_x(g.n_a()), special_y(g.n_b());
    x.members.for_each([&](int a) {
        if (g.neighbors_of_a(a).count_and(y.members) < cut) special_x.set(a);
    });
    y.members.for_each([&](int b) {
        if (g.neighbors_of_b(b).count_and(x.members) < cut) special_y.set(b);
    });

    std::vector<KstCopy> out = std::move(pre_placed);

    // Take `need` vertices from pool, preferring non-special ones, each
    // required to be adjacent to all of `must_reach` (empty = no constraint).
    auto pick = [&](const Bitset& pool, const Bitset& special, Side side, int need,
                    const std::vector<int>& must_reach) -> std::optional<std::vector<int>> {
        std::vector<int> got;
        auto scan = [&](bool want_special) {
            for (int v = pool.find_first(); v != -1 && static_cast<int>(got.size()) < need;
                 v = pool.find_next(v)) {
                if (special.test(v) != want_special) continue;
                bool ok = true;
                for (int u : must_reach)
                    if (!(side == Side::A ? g.has_edge(v, u) : g.has_edge(u, v))) {
                        ok = false;
                        break;
                    }
                if (ok) got.push_back(v);
            }
        };
        scan(false);
        scan(true);
        if (static_cast<int>(got.size()) < need) return std::nullopt;
        std::sort(got.begin(), got.end());
        return got;
    };

    auto place = [&](Orientation o, std::vector<int> in_x, std::vector<int> in_y) {
        for (int a : in_x) unc_x.reset(a);
        for (int b : in_y) unc_y.reset(b);
        KstCopy c{o, o == Orientation::TSideInA ? std::move(in_y) : std::move(in_x),
                  o == Orientation::TSideInA ? std::move(in_x) : std::move(in_y)};
        std::sort(c.s_side.begin(), c.s_side.end());
        std::sort(c.t_side.begin(), c.t_side.end());
        out.push_back(std::move(c));
        (o == Orientation::TSideInA ? p : q) -= 1;
    };

    // Specials first, each seeding its own copy built inside its neighborhood.
    auto embed_special = [&](int v, Side side) {
        if (side == Side::A) {
            Bitset nb_pool = g.neighbors_of_a(v) & unc_y;
            if (p > 0) {
                auto ys = pick(nb_pool, special_y, Side::B, s, {});
                if (!ys) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                std::vector<int> must = *ys;
                Bitset others = unc_x;
                others.reset(v);
                auto xs = pick(others, special_x, Side::A, t - 1, must);
                if (!xs) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                xs->push_back(v);
                place(Orientation::TSideInA, *xs, *ys);
            } else if (q > 0) {
                auto ys = pick(nb_pool, special_y, Side::B, t, {});
                if (!ys) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                Bitset others = unc_x;
                others.reset(v);
                auto xs = pick(others, special_x, Side::A, s - 1, *ys);
                if (!xs) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                xs->push_back(v);
                place(Orientation::TSideInB, *xs, *ys);
            } else {
                throw std::runtime_error("tile_dense_pair: special vertex left without copy slots");
            }
        } else {
            Bitset nb_pool = g.neighbors_of_b(v) & unc_x;
            if (q > 0) {
                auto xs = pick(nb_pool, special_x, Side::A, s, {});
                if (!xs) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                Bitset others = unc_y;
                others.reset(v);
                auto ys = pick(others, special_y, Side::B, t - 1, *xs);
                if (!ys) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                ys->push_back(v);
                place(Orientation::TSideInB, *xs, *ys);
            } else if (p > 0) {
                auto xs = pick(nb_pool, special_x, Side::A, t, {});
                if (!xs) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                Bitset others = unc_y;
                others.reset(v);
                auto ys = pick(others, special_y, Side::B, s - 1, *xs);
                if (!ys) throw std::runtime_error("tile_dense_pair: special vertex cannot seed a copy");
                ys->push_back(v);
                place(Orientation::TSideInA, *xs, *ys);
            } else {
                throw std::runtime_error("tile_dense_pair: special vertex left without copy slots");
            }
        }
    };
    for (int v = special_x.find_first(); v != -1; v = special_x.find_next(v))
        if (unc_x.test(v)) embed_special(v, Side::A);
    for (int v = special_y.find_first(); v != -1; v = special_y.find_next(v))
        if (unc_y.test(v)) embed_special(v, Side::B);

    // Remaining vertices are near-complete; fill lowest-index-first.
    auto fill = [&](Orientation o) {
        int in_x_count = o == Orientation::TSideInA ? t : s;
        int in_y_count = o == Orientation::TSideInA ? s : t;
        std::vector<int> xs;
        Bitset common = Bitset::full(g.n_b());
        for (int v = unc_x.find_first(); v != -1 && static_cast<int>(xs.size()) < in_x_count;
             v = unc_x.find_next(v)) {
            xs.push_back(v);
            common &= g.neighbors_of_a(v);
        }
        common &= unc_y;
        if (static_cast<int>(xs.size()) < in_x_count || common.count() < in_y_count)
            throw std::runtime_error("tile_dense_pair: greedy stuck");
        std::vector<int> ys;
        for (int v = common.find_first(); static_cast<int>(ys.size()) < in_y_count;
             v = common.find_next(v))
            ys.push_back(v);
        place(o, std::move(xs), std::move(ys));
    };
    while (p > 0) fill(Orientation::TSideInA);
    while (q > 0) fill(Orientation::TSideInB);

    if (unc_x.any() || unc_y.any())
        throw std::logic_error("tile_dense_pair: arithmetic left vertices uncovered");
    return out;
}

namespace {

// Shared machinery for tile_even / tile_odd: bring |a1| to target_a1 and |b1|
// to target_b1 (so a2/b2 land on the complements) by relocating star centers
// out of whichever set exceeds its target and distributing specials, placing
// one extended copy per relocated star as pre-placed input of a dense pair.
struct Balancer {
    const BipartiteGraph& g;
    int s, t, n;
    VertexSet a1, a2, b1, b2;
    Bitset used_a, used_b;
    std::vector<KstCopy> pre1;  // pair (a1, b2)
    std::vector<KstCopy> pre2;  // pair (a2, b1)

    Balancer(const BipartiteGraph& gr, const ExtremalLabeling& lab, int s_, int t_)
        : g(gr), s(s_), t(t_), n(gr.n_a()), a1(lab.a1), a2(lab.a2), b1(lab.b1), b2(lab.b2),
          used_a(gr.n_a()), used_b(gr.n_b()) {}

    VertexSet& a_set(int i) { return i == 1 ? a1 : a2; }
    VertexSet& b_set(int i) { return i == 1 ? b1 : b2; }

    // Number of stars a class needs to donate out of set1/set2 for target1.
    static std::pair<int, int> donations(int size1, int size2, int n, int target1) {
        return {std::max(0, size1 - target1), std::max(0, size2 - (n - target1))};
    }

    void run(const ExtremalLabeling& lab, int target_a1, int target_b1) {
        auto [ra1, ra2] = donations(a1.size(), a2.size(), n, target_a1);
        auto [rb1, rb2] = donations(b1.size(), b2.size(), n, target_b1);
        int need_a[3] = {0, ra1, ra2};
        int need_b[3] = {0, rb1, rb2};

        // One find_stars call per diagonal pair feeding both classes keeps
        // all reserved stars vertex-disjoint.
        std::vector<Star> stars_a[3], stars_b[3];
        for (int i = 1; i <= 2; ++i) {
            if (need_a[i] == 0 && need_b[i] == 0) continue;
            if (need_a[i] > 0) {
                auto fam = find_stars(s, a_set(i), b_set(i), g);
                stars_a[i] = std::move(fam.first);
                stars_b[i] = std::move(fam.second);
            } else {
                auto fam = find_stars(s, b_set(i), a_set(i), g);
                stars_b[i] = std::move(fam.first);
                stars_a[i] = std::move(fam.second);
            }
            if (static_cast<int>(stars_a[i].size()) < need_a[i] ||
                static_cast<int>(stars_b[i].size()) < need_b[i])
                throw std::runtime_error("balance: not enough disjoint stars");
            stars_a[i].resize(need_a[i]);
            stars_b[i].resize(need_b[i]);
            for (const Star& st : stars_a[i]) reserve(st);
            for (const Star& st : stars_b[i]) reserve(st);
        }
        for (int i = 1; i <= 2; ++i) {
            for (const Star& st : stars_a[i]) relocate_a(i, st);
            for (const Star& st : stars_b[i]) relocate_b(i, st);
        }

        distribute(lab.a0, a1, a2, target_a1);
        distribute(lab.b0, b1, b2, target_b1);
        if (a1.size() != target_a1 || b1.size() != target_b1 || a2.size() != n - target_a1 ||
            b2.size() != n - target_b1)
            throw std::runtime_error("balance: class sizes missed their targets");
    }

private:
    void reserve(const Star& st) {
        (st.center.side == Side::A ? used_a : used_b).set(st.center.index);
        Bitset& leaves_used = st.center.side == Side::A ? used_b : used_a;
        st.leaves.members.for_each([&](int w) { leaves_used.set(w); });
    }

    // Donor a_i: center joins a_{3-i}, t-1 partners from a_{3-i} adjacent to
    // all leaves complete the t-side; the copy lands in pair (a_{3-i}, b_i).
    void relocate_a(int i, const Star& st) {
        int c = st.center.index;
        a_set(i).remove(c);
        a_set(3 - i).add(c);
        std::vector<int> leaves = st.leaves.indices();
        std::vector<int> tside{c};
        a_set(3 - i).members.for_each([&](int v) {
            if (static_cast<int>(tside.size()) >= t || used_a.test(v) || v == c) return;
            for (int w : leaves)
                if (!g.has_edge(v, w)) return;
            tside.push_back(v);
        });
        if (static_cast<int>(tside.size()) < t)
            throw std::runtime_error("balance: no partners for a relocated star");
        for (int v : tside) used_a.set(v);
        std::sort(tside.begin(), tside.end());
        KstCopy copy{Orientation::TSideInA, std::move(leaves), std::move(tside)};
        (3 - i == 1 ? pre1 : pre2).push_back(std::move(copy));
    }

    void relocate_b(int j, const Star& st) {
        int c = st.center.index;
        b_set(j).remove(c);
        b_set(3 - j).add(c);
        std::vector<int> leaves = st.leaves.indices();
        std::vector<int> tside{c};
        b_set(3 - j).members.for_each([&](int v) {
            if (static_cast<int>(tside.size()) >= t || used_b.test(v) || v == c) return;
            for (int w : leaves)
                if (!g.has_edge(w, v)) return;
            tside.push_back(v);
        });
        if (static_cast<int>(tside.size()) < t)
            throw std::runtime_error("balance: no partners for a relocated star");
        for (int v : tside) used_b.set(v);
        std::sort(tside.begin(), tside.end());
        KstCopy copy{Orientation::TSideInB, std::move(leaves), std::move(tside)};
        (j == 1 ? pre1 : pre2).push_back(std::move(copy));
    }

    void distribute(const VertexSet& specials, VertexSet& set1, VertexSet& set2, int target1) {
        int missing = target1 - set1.size();
        if (missing < 0) throw std::runtime_error("balance: set above target after relocation");
        specials.members.for_each([&](int v) {
            if (missing > 0) {
                set1.add(v);
                --missing;
            } else {
                set2.add(v);
            }
        });
        if (missing > 0) throw std::runtime_error("balance: not enough special vertices");
    }
};

int pair_quota(int s, int t, int size_x, int size_y) {
    PairCounts c = solve_pair_counts(s, t, size_x, size_y);
    return c.p;
}

Factor run_balanced_tiling(const BipartiteGraph& g, const ExtremalLabeling& lab, int s, int t,
                           int target_a1, int target_b1) {
    Balancer bal(g, lab, s, t);
    bal.run(lab, target_a1, target_b1);
    int n = g.n_a();

    Factor f;
    f.copies = tile_dense_pair(g, bal.a1, bal.b2, s, t,
                               pair_quota(s, t, target_a1, n - target_b1), std::move(bal.pre1));
    std::vector<KstCopy> second = tile_dense_pair(g, bal.a2, bal.b1, s, t,
                                                  pair_quota(s, t, n - target_a1, target_b1),
                                                  std::move(bal.pre2));
    f.copies.insert(f.copies.end(), second.begin(), second.end());
    if (!verify_factor(g, s, t, f)) throw std::logic_error("tiling failed factor verification");
    return f;
}

void check_tiler_input(const BipartiteGraph& g, int s, int t, bool want_even, const char* who) {
    if (s < 1 || t <= s) throw std::invalid_argument(std::string(who) + ": need 1 <= s < t");
    if (g.n_a() != g.n_b()) throw std::invalid_argument(std::string(who) + ": classes must be balanced");
    int n = g.n_a();
    if (n == 0 || n % (s + t) != 0)
        throw std::invalid_argument(std::string(who) + ": n must be a positive multiple of s+t");
    int k = n / (s + t);
    if ((k % 2 == 0) != want_even)
        throw std::invalid_argument(std::string(who) + ": wrong parity of k");
    if (min_degree(g) < threshold(s, t, k))
        throw std::runtime_error(std::string(who) + ": minimum degree below the tiling threshold");
}

}  // namespace

Factor tile_even(const BipartiteGraph& g, const ExtremalLabeling& lab, int s, int t) {
    check_tiler_input(g, s, t, true, "tile_even");
    int n = g.n_a();
    return run_balanced_tiling(g, lab, s, t, n / 2, n / 2);
}

Factor tile_odd(const BipartiteGraph& g, const ExtremalLabeling& lab, int s, int t) {
    check_tiler_input(g, s, t, false, "tile_odd");
    int n = g.n_a();
    int l = (n / (s + t) - 1) / 2;
    int small = l * (s + t) + s, big = l * (s + t) + t;

    // Two valid target assignments for (|a1|, |b1|); prefer the one needing
    // fewer star relocations (small target on a tie), but fall through to the
    // other when the preferred one cannot be balanced.
    auto cost = [&](int target) {
        auto [r1, r2] = Balancer::donations(lab.a1.size(), lab.a2.size(), n, target);
        auto [r3, r4] = Balancer::donations(lab.b1.size(), lab.b2.size(), n, target);
        return r1 + r2 + r3 + r4;
    };
    int preferred = cost(big) < cost(small) ? big : small;
    try {
        return run_balanced_tiling(g, lab, s, t, preferred, preferred);
    } catch (const std::runtime_error&) {
        int other = preferred == small ? big : small;
        return run_balanced_tiling(g, lab, s, t, other, other);
    }
}

namespace {

std::optional<std::pair<VertexSet, VertexSet>> find_sparse_base(const BipartiteGraph& g,
                                                                double alpha) {
    int n = g.n_a();
    int half = n / 2;
    if (half == 0) return std::nullopt;

    auto low_half_by = [&](Side side, const std::optional<VertexSet>& into) {
        std::vector<std::pair<int, int>> order;
        for (int i = 0; i < n; ++i) {
            int d = into ? degree_to(g, {side, i}, *into) : degree(g, {side, i});
            order.emplace_back(d, i);
        }
        std::sort(order.begin(), order.end());
        VertexSet out = VertexSet::empty(side, n);
        for (int i = 0; i < half; ++i) out.add(order[i].second);
        return out;
    };

    // Alternate low-half refinement from a starting half until the tested
    // pair is sparse or the halves stop moving.
    auto refine = [&](Side first, VertexSet h1) -> std::optional<std::pair<VertexSet, VertexSet>> {
        for (int round = 0; round < 4; ++round) {
            VertexSet h2 = low_half_by(opposite(first), h1);
            const VertexSet& base_a = first == Side::B ? h2 : h1;
            const VertexSet& base_b = first == Side::B ? h1 : h2;
            if (density(g, base_a, base_b).to_double() < alpha)
                return std::make_pair(base_a, base_b);
            VertexSet next = low_half_by(first, h2);
            if (next.members == h1.members) break;  // fixpoint, no improvement
            h1 = std::move(next);
        }
        return std::nullopt;
    };

    // Degree-ordered split seeded two ways: by total degree, and by single
    // anchor rows (in an extremal graph one vertex's non-neighborhood already
    // approximates the sparse partner block).
    for (Side first : {Side::B, Side::A})
        if (auto base = refine(first, low_half_by(first, std::nullopt))) return base;
    for (int idx : {0, half}) {
        for (Side first : {Side::B, Side::A}) {
            VertexSet anchor = VertexSet::of(opposite(first), n, {idx});
            if (auto base = refine(first, low_half_by(first, anchor))) return base;
        }
    }
    return std::nullopt;
}

}  // namespace

TileResult tile(const BipartiteGraph& g, int s, int t, const TilerConfig& cfg) {
    if (s < 1 || t <= s) throw std::invalid_argument("tile: need 1 <= s < t");
    if (g.n_a() != g.n_b()) throw std::invalid_argument("tile: classes must be balanced");
    int n = g.n_a();
    if (n == 0) return {TileStatus::Found, Factor{}, TileRoute::Precheck, "empty graph"};
    if (n % (s + t) != 0)
        return {TileStatus::NoFactor, Factor{}, TileRoute::Precheck, "n not a multiple of s+t"};

    std::string note;
    try {
        auto base = find_sparse_base(g, cfg.alpha);
        if (base) {
            ExtremalLabeling lab = repair_labeling(g, classify(g, base->first, base->second, cfg));
            int k = n / (s + t);
            Factor f = k % 2 == 0 ? tile_even(g, lab, s, t) : tile_odd(g, lab, s, t);
            return {TileStatus::Found, std::move(f), TileRoute::Extremal, "extremal route"};
        }
        note = "no sparse base pair";
    } catch (const std::runtime_error& e) {
        note = e.what();
    } catch (const std::invalid_argument& e) {
        note = e.what();
    }

    if (n <= cfg.fallback_n_cap) {
        SearchResult r = has_factor(g, s, t, SearchBudget::unlimited());
        if (r.status == SearchStatus::Found)
            return {TileStatus::Found, std::move(r.factor), TileRoute::Fallback, note};
        return {TileStatus::NoFactor, Factor{}, TileRoute::Fallback, note};
    }
    return {TileStatus::Unknown, Factor{}, TileRoute::Fallback,
            note + "; n exceeds the exact-solver fallback cap"};
}

}  // namespace kst
