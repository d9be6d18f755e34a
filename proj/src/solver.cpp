#include "kst/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace kst {

namespace {

void check_st(int s, int t) {
    if (s < 1 || t <= s) throw std::invalid_argument("need 1 <= s < t");
}

// Enumerates copies containing v whose vertices stay inside allowed_a /
// allowed_b. cb returns false to abort. Orientation TSideInA first; within an
// orientation the members of v's part are chosen in ascending order, then the
// opposite part in ascending order. All scratch state is per-call, so the
// callback may recurse into another enumeration.
class CopyEnumerator {
public:
    CopyEnumerator(const BipartiteGraph& g, int s, int t) : g_(g), s_(s), t_(t) {}

    bool enumerate(VertexRef v, const Bitset& allowed_a, const Bitset& allowed_b,
                   bool allow_tsa, bool allow_tsb, const std::function<bool(const KstCopy&)>& cb) const {
        if (v.side == Side::A ? !allowed_a.test(v.index) : !allowed_b.test(v.index))
            throw std::invalid_argument("copies_covering: v must not be avoided");
        for (Orientation o : {Orientation::TSideInA, Orientation::TSideInB}) {
            if (o == Orientation::TSideInA && !allow_tsa) continue;
            if (o == Orientation::TSideInB && !allow_tsb) continue;
            bool v_in_t = (o == Orientation::TSideInA) == (v.side == Side::A);
            int part_size = v_in_t ? t_ : s_;
            int other_size = v_in_t ? s_ : t_;
            const Bitset& pool = v.side == Side::A ? allowed_a : allowed_b;
            const Bitset& other_pool = v.side == Side::A ? allowed_b : allowed_a;

            std::vector<int> part{v.index}, other;
            Bitset common = g_.neighbors(v) & other_pool;
            if (!part_dfs(v, o, pool, common, part_size - 1, 0, other_size, part, other, cb))
                return false;
        }
        return true;
    }

private:
    // Extend v's part by `need` more members (ascending, skipping v), keeping
    // the running common neighborhood; then pick the other part from it.
    bool part_dfs(VertexRef v, Orientation o, const Bitset& pool, const Bitset& common, int need,
                  int start_after, int other_size, std::vector<int>& part, std::vector<int>& other,
                  const std::function<bool(const KstCopy&)>& cb) const {
        if (common.count() < other_size) return true;  // prune, keep enumerating
        if (need == 0) return other_dfs(v, o, common, other_size, -1, part, other, cb);
        for (int m = pool.find_next(start_after - 1); m != -1; m = pool.find_next(m)) {
            if (m == v.index) continue;
            part.push_back(m);
            Bitset next = common & g_.neighbors({v.side, m});
            bool go = part_dfs(v, o, pool, next, need - 1, m + 1, other_size, part, other, cb);
            part.pop_back();
            if (!go) return false;
        }
        return true;
    }

    bool other_dfs(VertexRef v, Orientation o, const Bitset& common, int need, int prev,
                   std::vector<int>& part, std::vector<int>& other,
                   const std::function<bool(const KstCopy&)>& cb) const {
        if (need == 0) return emit(v, o, part, other, cb);
        for (int m = common.find_next(prev); m != -1; m = common.find_next(m)) {
            other.push_back(m);
            bool go = other_dfs(v, o, common, need - 1, m, part, other, cb);
            other.pop_back();
            if (!go) return false;
        }
        return true;
    }

    bool emit(VertexRef v, Orientation o, const std::vector<int>& part_in,
              const std::vector<int>& other, const std::function<bool(const KstCopy&)>& cb) const {
        std::vector<int> part = part_in;
        std::sort(part.begin(), part.end());
        KstCopy c;
        c.orientation = o;
        bool v_in_t = (o == Orientation::TSideInA) == (v.side == Side::A);
        if (v_in_t) {
            c.t_side = std::move(part);
            c.s_side = other;
        } else {
            c.s_side = std::move(part);
            c.t_side = other;
        }
        return cb(c);
    }

    const BipartiteGraph& g_;
    int s_, t_;
};

struct SearchState {
    const BipartiteGraph& g;
    int s, t;
    std::uint64_t node_limit;
    bool timed;
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    Bitset cov_a, cov_b;
    int slots_tsa, slots_tsb;
    std::vector<KstCopy> placed;
    // Covered states proven dead. Different copy sets can partition the same
    // covered region, so caching prunes heavily on NoFactor instances. Only
    // exact state keys are used (classes up to 32 vertices); the cap keeps
    // memory bounded without affecting soundness.
    bool use_memo;
    std::unordered_set<std::uint64_t> dead;
};

std::uint64_t pack_covered(const SearchState& st) {
    std::uint64_t key = 0;
    for (int a = st.cov_a.find_first(); a != -1; a = st.cov_a.find_next(a))
        key |= std::uint64_t{1} << a;
    for (int b = st.cov_b.find_first(); b != -1; b = st.cov_b.find_next(b))
        key |= std::uint64_t{1} << (32 + b);
    return key;
}

constexpr std::size_t k_dead_cache_cap = std::size_t{1} << 22;

bool over_budget(SearchState& st) {
    if (st.node_limit && st.nodes > st.node_limit) return true;
    if (st.timed && (st.nodes & 1023) == 0 && std::chrono::steady_clock::now() > st.deadline)
        return true;
    return false;
}

// Cheap per-node feasibility: every uncovered vertex needs >= s uncovered
// neighbors, and vertices with fewer than t uncovered neighbors can only sit
// in a t-part on their own class.
bool degrees_feasible(const SearchState& st, const Bitset& unc_a, const Bitset& unc_b) {
    int must_t_a = 0, must_t_b = 0;
    for (int a = unc_a.find_first(); a != -1; a = unc_a.find_next(a)) {
        int d = st.g.neighbors_of_a(a).count_and(unc_b);
        if (d < st.s) return false;
        if (d < st.t) ++must_t_a;
    }
    if (must_t_a > st.slots_tsa * st.t) return false;
    for (int b = unc_b.find_first(); b != -1; b = unc_b.find_next(b)) {
        int d = st.g.neighbors_of_b(b).count_and(unc_a);
        if (d < st.s) return false;
        if (d < st.t) ++must_t_b;
    }
    return must_t_b <= st.slots_tsb * st.t;
}

bool search(SearchState& st, CopyEnumerator& en) {
    ++st.nodes;
    if (over_budget(st)) {
        st.budget_hit = true;
        return false;
    }
    Bitset unc_a = Bitset::full(st.g.n_a()).andnot(st.cov_a);
    Bitset unc_b = Bitset::full(st.g.n_b()).andnot(st.cov_b);
    int va = unc_a.find_first();
    int vb = unc_b.find_first();
    if (va == -1 && vb == -1) return true;
    if (!degrees_feasible(st, unc_a, unc_b)) return false;

    std::uint64_t key = 0;
    if (st.use_memo) {
        key = pack_covered(st);
        if (st.dead.count(key)) return false;
    }

    VertexRef v = va != -1 ? VertexRef{Side::A, va} : VertexRef{Side::B, vb};
    bool found = false;
    en.enumerate(v, unc_a, unc_b, st.slots_tsa > 0, st.slots_tsb > 0, [&](const KstCopy& c) {
        for (int a : c.part_in_a()) st.cov_a.set(a);
        for (int b : c.part_in_b()) st.cov_b.set(b);
        (c.orientation == Orientation::TSideInA ? st.slots_tsa : st.slots_tsb) -= 1;
        st.placed.push_back(c);

        found = search(st, en);

        if (!found) {
            st.placed.pop_back();
            (c.orientation == Orientation::TSideInA ? st.slots_tsa : st.slots_tsb) += 1;
            for (int a : c.part_in_a()) st.cov_a.reset(a);
            for (int b : c.part_in_b()) st.cov_b.reset(b);
        }
        return !found && !st.budget_hit;  // keep enumerating unless done
    });
    // Budget-abandoned subtrees are not proven dead and must stay cacheable-free.
    if (!found && st.use_memo && !st.budget_hit && st.dead.size() < k_dead_cache_cap)
        st.dead.insert(key);
    return found;
}

}  // namespace

std::vector<KstCopy> copies_covering(const BipartiteGraph& g, int s, int t, VertexRef v,
                                     const VertexSet& avoid_a, const VertexSet& avoid_b) {
    check_st(s, t);
    if (avoid_a.side != Side::A || avoid_b.side != Side::B)
        throw std::invalid_argument("copies_covering: avoid sets must be (A-set, B-set)");
    Bitset allowed_a = Bitset::full(g.n_a()).andnot(avoid_a.members);
    Bitset allowed_b = Bitset::full(g.n_b()).andnot(avoid_b.members);
    std::vector<KstCopy> out;
    CopyEnumerator en(g, s, t);
    en.enumerate(v, allowed_a, allowed_b, true, true, [&](const KstCopy& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

SearchResult has_factor(const BipartiteGraph& g, int s, int t, const SearchBudget& budget) {
    check_st(s, t);
    if (g.n_a() != g.n_b()) throw std::invalid_argument("has_factor: classes must be balanced");
    int n = g.n_a();
    if (n == 0) return {SearchStatus::Found, Factor{}, 0};
    if (n % (s + t) != 0) return {SearchStatus::NoFactor, Factor{}, 0};

    SearchState st{g,
                   s,
                   t,
                   budget.node_limit,
                   budget.time_limit_secs > 0,
                   std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(budget.time_limit_secs)),
                   0,
                   false,
                   Bitset(n),
                   Bitset(n),
                   n / (s + t),
                   n / (s + t),
                   {},
                   n <= 32,
                   {}};
    CopyEnumerator en(g, s, t);
    bool found = search(st, en);
    if (found) {
        Factor f{std::move(st.placed)};
        if (!verify_factor(g, s, t, f)) throw std::logic_error("has_factor: found factor fails verification");
        int tsa = 0;
        for (const KstCopy& c : f.copies)
            if (c.orientation == Orientation::TSideInA) ++tsa;
        if (tsa != n / (s + t))
            throw std::logic_error("has_factor: orientation counts violate the forced balance");
        return {SearchStatus::Found, std::move(f), st.nodes};
    }
    if (st.budget_hit) return {SearchStatus::BudgetExceeded, Factor{}, st.nodes};
    return {SearchStatus::NoFactor, Factor{}, st.nodes};
}

bool verify_factor(const BipartiteGraph& g, int s, int t, const Factor& f) {
    // s == t is allowed so K_{s+t,s+t}-factors can be validated too.
    if (s < 1 || t < s) return false;
    std::vector<char> seen_a(g.n_a(), 0), seen_b(g.n_b(), 0);
    for (const KstCopy& c : f.copies) {
        if (static_cast<int>(c.s_side.size()) != s || static_cast<int>(c.t_side.size()) != t)
            return false;
        const std::vector<int>& in_a = c.part_in_a();
        const std::vector<int>& in_b = c.part_in_b();
        for (int a : in_a) {
            if (a < 0 || a >= g.n_a() || seen_a[a]) return false;
            seen_a[a] = 1;
        }
        for (int b : in_b) {
            if (b < 0 || b >= g.n_b() || seen_b[b]) return false;
            seen_b[b] = 1;
        }
        for (int a : in_a)
            for (int b : in_b)
                if (!g.has_edge(a, b)) return false;
    }
    for (char x : seen_a)
        if (!x) return false;
    for (char x : seen_b)
        if (!x) return false;
    return true;
}

namespace {

// Brute-force recursion: cover the lowest uncovered vertex in every possible
// way, checking edges pairwise and nothing else. States that cannot complete
// are cached (n <= 12 per side packs into one 64-bit key).
struct BruteCtx {
    const BipartiteGraph& g;
    int s, t;
    std::vector<char> cov_a, cov_b;
    std::vector<KstCopy> placed;
    std::unordered_set<std::uint64_t> dead;
    std::uint64_t nodes = 0;
};

std::uint64_t pack_state(const BruteCtx& c) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < c.cov_a.size(); ++i)
        if (c.cov_a[i]) k |= std::uint64_t{1} << i;
    for (std::size_t i = 0; i < c.cov_b.size(); ++i)
        if (c.cov_b[i]) k |= std::uint64_t{1} << (32 + i);
    return k;
}

std::vector<int> free_indices(const std::vector<char>& cov) {
    std::vector<int> out;
    for (std::size_t i = 0; i < cov.size(); ++i)
        if (!cov[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool all_edges(const BipartiteGraph& g, const std::vector<int>& as, const std::vector<int>& bs) {
    for (int a : as)
        for (int b : bs)
            if (!g.has_edge(a, b)) return false;
    return true;
}

bool subsets(const std::vector<int>& pool, int need, std::size_t from, std::vector<int>& out,
             const std::function<bool(const std::vector<int>&)>& body) {
    // Returns true if body succeeded for some subset.
    if (need == 0) return body(out);
    for (std::size_t i = from; i + need <= pool.size(); ++i) {
        out.push_back(pool[i]);
        if (subsets(pool, need - 1, i + 1, out, body)) {
            out.pop_back();
            return true;
        }
        out.pop_back();
    }
    return false;
}

bool brute(BruteCtx& c) {
    ++c.nodes;
    int va = -1, vb = -1;
    for (std::size_t i = 0; i < c.cov_a.size() && va == -1; ++i)
        if (!c.cov_a[i]) va = static_cast<int>(i);
    for (std::size_t i = 0; i < c.cov_b.size() && vb == -1; ++i)
        if (!c.cov_b[i]) vb = static_cast<int>(i);
    if (va == -1 && vb == -1) return true;

    std::uint64_t key = pack_state(c);
    if (c.dead.count(key)) return false;

    std::vector<int> free_a = free_indices(c.cov_a);
    std::vector<int> free_b = free_indices(c.cov_b);

    auto try_copy = [&](Orientation o, const std::vector<int>& in_a, const std::vector<int>& in_b) {
        if (!all_edges(c.g, in_a, in_b)) return false;
        for (int a : in_a) c.cov_a[a] = 1;
        for (int b : in_b) c.cov_b[b] = 1;
        KstCopy copy{o, o == Orientation::TSideInA ? in_b : in_a,
                     o == Orientation::TSideInA ? in_a : in_b};
        c.placed.push_back(copy);
        if (brute(c)) return true;
        c.placed.pop_back();
        for (int a : in_a) c.cov_a[a] = 0;
        for (int b : in_b) c.cov_b[b] = 0;
        return false;
    };

    bool ok = false;
    if (va != -1) {
        // v is the lowest uncovered A-vertex; every copy covering it uses v
        // plus a combination of higher free A-vertices.
        std::vector<int> rest_a(free_a.begin() + 1, free_a.end());
        for (int a_count : {c.t, c.s}) {
            Orientation o = a_count == c.t ? Orientation::TSideInA : Orientation::TSideInB;
            int b_count = a_count == c.t ? c.s : c.t;
            std::vector<int> pa{va}, pb;
            ok = subsets(rest_a, a_count - 1, 0, pa, [&](const std::vector<int>& apart) {
                std::vector<int> tmp;
                return subsets(free_b, b_count, 0, tmp, [&](const std::vector<int>& bpart) {
                    return try_copy(o, apart, bpart);
                });
            });
            if (ok) break;
        }
    } else {
        std::vector<int> rest_b(free_b.begin() + 1, free_b.end());
        for (int b_count : {c.t, c.s}) {
            Orientation o = b_count == c.t ? Orientation::TSideInB : Orientation::TSideInA;
            int a_count = b_count == c.t ? c.s : c.t;
            std::vector<int> pb{vb};
            ok = subsets(rest_b, b_count - 1, 0, pb, [&](const std::vector<int>& bpart) {
                std::vector<int> tmp;
                return subsets(free_a, a_count, 0, tmp, [&](const std::vector<int>& apart) {
                    return try_copy(o, apart, bpart);
                });
            });
            if (ok) break;
        }
    }
    if (!ok) c.dead.insert(key);
    return ok;
}

}  // namespace

SearchResult brute_force_has_factor(const BipartiteGraph& g, int s, int t) {
    check_st(s, t);
    if (g.n_a() + g.n_b() > 24)
        throw std::invalid_argument("brute_force_has_factor: hard cap n_a + n_b <= 24 exceeded");
    BruteCtx c{g, s, t, std::vector<char>(g.n_a(), 0), std::vector<char>(g.n_b(), 0), {}, {}, 0};
    if (brute(c)) {
        Factor f{std::move(c.placed)};
        for (KstCopy& copy : f.copies) {
            std::sort(copy.s_side.begin(), copy.s_side.end());
            std::sort(copy.t_side.begin(), copy.t_side.end());
        }
        return {SearchStatus::Found, std::move(f), c.nodes};
    }
    return {SearchStatus::NoFactor, Factor{}, c.nodes};
}

Factor split_stst(const BipartiteGraph& g, int s, int t, const Factor& big) {
    check_st(s, t);
    if (!verify_factor(g, s + t, s + t, big))
        throw std::invalid_argument("split_stst: input is not a valid K_{s+t,s+t}-factor");
    Factor out;
    for (const KstCopy& c : big.copies) {
        std::vector<int> x = c.part_in_a(), y = c.part_in_b();
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        KstCopy first{Orientation::TSideInB, {x.begin(), x.begin() + s}, {y.begin(), y.begin() + t}};
        KstCopy second{Orientation::TSideInA, {y.begin() + t, y.end()}, {x.begin() + s, x.end()}};
        out.copies.push_back(std::move(first));
        out.copies.push_back(std::move(second));
    }
    if (!verify_factor(g, s, t, out)) throw std::logic_error("split_stst: split failed verification");
    return out;
}

}  // namespace kst
