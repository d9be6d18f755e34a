// Acceptance suite: runs the eight release criteria and prints one PASS/FAIL
// line per criterion. Usage:
//   kst_acceptance [--only N] [--kst-bin /path/to/kst]
// Exit code 0 iff every executed criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kst/c4free.hpp"
#include "kst/extremal.hpp"
#include "kst/instances.hpp"
#include "kst/io.hpp"
#include "kst/solver.hpp"
#include "kst/tiler.hpp"

using namespace kst;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. Lower-bound constructions: min degree = threshold - 1, certified
//    obstruction, and (n <= 15 per side) independent NoFactor by search.
//    Whole criterion must finish within 5 minutes.
bool criterion1(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    struct Case {
        ConstructionParams p;
        ConstructionCase kind;
    };
    std::vector<Case> cases{
        {{1, 2, 2}, ConstructionCase::Even},    {{1, 2, 4}, ConstructionCase::Even},
        {{2, 3, 2}, ConstructionCase::Even},    {{1, 2, 3}, ConstructionCase::OddSucc},
        {{2, 3, 3}, ConstructionCase::OddSucc}, {{1, 3, 3}, ConstructionCase::OddMid},
        {{2, 4, 3}, ConstructionCase::OddMid},
    };
    std::ostringstream log;
    bool ok = true;
    for (const Case& c : cases) {
        LabeledConstruction lc = c.kind == ConstructionCase::Even    ? build_even(c.p)
                                 : c.kind == ConstructionCase::OddMid ? build_odd_mid(c.p)
                                                                      : build_odd_succ(c.p);
        int thr = threshold(c.p.s, c.p.t, c.p.k);
        bool delta_ok = lc.claimed_min_degree == thr - 1 && min_degree(lc.graph) == thr - 1;
        bool cert_ok = check_obstruction(lc.graph, obstruction_for(lc), c.p.s, c.p.t);
        // The stated gate is n <= 15 per side; the search is cheap enough to
        // cover every listed instance (largest: n = 18).
        bool solver_ok = true;
        std::string solver_note = "skipped(n>18)";
        if (lc.graph.n_a() <= 18) {
            SearchResult r = has_factor(lc.graph, c.p.s, c.p.t);
            solver_ok = r.status == SearchStatus::NoFactor;
            solver_note = solver_ok ? "NoFactor" : "UNEXPECTED";
        }
        ok = ok && delta_ok && cert_ok && solver_ok;
        log << "(" << c.p.s << "," << c.p.t << "," << c.p.k << "): delta=" << (delta_ok ? "ok" : "BAD")
            << " cert=" << (cert_ok ? "ok" : "BAD") << " solver=" << solver_note << "; ";
    }
    double secs = seconds_since(start);
    ok = ok && secs <= 300.0;
    log << "elapsed=" << secs << "s (limit 300)";
    detail = log.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Upper-bound sanity: 20 seeded random graphs per (s,t,k) with min degree
//    >= threshold all tile to a verified factor within 10 s each.
bool criterion2(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    int total = 0;
    double worst = 0;
    for (auto [s, t] : {std::pair{1, 2}, std::pair{2, 3}}) {
        for (int k : {2, 3}) {
            int n = k * (s + t);
            int thr = threshold(s, t, k);
            for (int trial = 0; trial < 20; ++trial) {
                std::uint64_t seed = 1000 * s + 100 * t + 10 * k + trial;
                BipartiteGraph g = random_with_min_degree(n, 0.45, thr, seed);
                auto start = std::chrono::steady_clock::now();
                TileResult r = tile(g, s, t, {});
                double secs = seconds_since(start);
                worst = std::max(worst, secs);
                bool good = r.status == TileStatus::Found && verify_factor(g, s, t, r.factor) &&
                            secs <= 10.0;
                if (!good) {
                    ok = false;
                    log << "FAIL (" << s << "," << t << "," << k << ") trial " << trial << "; ";
                }
                ++total;
            }
        }
    }
    log << total << " instances, 100% Found+verified required, worst " << worst << "s (limit 10)";
    detail = log.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Oracle equivalence: exhaustive 512 graphs on 3+3 with (1,2), plus 500
//    seeded random graphs with n_a + n_b <= 24 across three (s,t) pairs.
bool criterion3(std::string& detail) {
    int disagreements = 0;
    for (int mask = 0; mask < 512; ++mask) {
        BipartiteGraph g(3, 3);
        for (int e = 0; e < 9; ++e)
            if (mask & (1 << e)) g.add_edge(e / 3, e % 3);
        if (has_factor(g, 1, 2).status != brute_force_has_factor(g, 1, 2).status) ++disagreements;
    }
    int random_checked = 0;
    std::vector<std::pair<int, int>> sts{{1, 2}, {1, 3}, {2, 3}};
    for (std::uint64_t seed = 1; random_checked < 500; ++seed) {
        auto [s, t] = sts[seed % 3];
        Rng rng(seed * 0x9e3779b97f4a7c15ULL);
        int max_k = 12 / (s + t);
        int n = (s + t) * (1 + rng.below(max_k));
        double density = 0.25 + 0.06 * rng.below(10);
        BipartiteGraph g = random_bipartite(n, n, density, seed);
        SearchResult fast = has_factor(g, s, t);
        SearchResult slow = brute_force_has_factor(g, s, t);
        if (fast.status != slow.status) ++disagreements;
        ++random_checked;
    }
    std::ostringstream log;
    log << "512 exhaustive + " << random_checked << " random instances, " << disagreements
        << " disagreements";
    detail = log.str();
    return disagreements == 0;
}

// ---------------------------------------------------------------------------
// 4. Gadget properties for all p <= 4 and 5 moduli above the feasibility
//    bound: P is p-regular and C4-free; Q and R degree multisets are exact.
bool criterion4(std::string& detail) {
    bool ok = true;
    int built = 0;
    for (int p = 0; p <= 4; ++p) {
        int bound = p * p + p + 1;
        for (int m : {bound, bound + 2, bound + 5, bound + 9, bound + 14}) {
            BipartiteGraph g = build_p(m, p);
            for (int i = 0; i < m; ++i)
                ok = ok && g.neighbors_of_a(i).count() == p && g.neighbors_of_b(i).count() == p;
            ok = ok && is_k22_free(g) && g.edge_count() == static_cast<long long>(m) * p;

            if (m >= 2) {
                BipartiteGraph q = build_q(m, p);
                int low = 0;
                for (int i = 0; i < q.n_a(); ++i) {
                    int d = q.neighbors_of_a(i).count();
                    ok = ok && (d == p || d == p - 1);
                    if (d == p - 1) ++low;
                }
                ok = ok && (p == 0 || low == 2 * p);
                for (int i = 0; i < q.n_b(); ++i) ok = ok && q.neighbors_of_b(i).count() == p;
                ok = ok && is_k22_free(q);
            }
            BipartiteGraph r = build_r(m, p);
            int low = 0;
            for (int i = 0; i < r.n_a(); ++i) {
                int d = r.neighbors_of_a(i).count();
                ok = ok && (d == p || d == p - 1);
                if (d == p - 1) ++low;
            }
            ok = ok && (p == 0 || low == p);
            for (int i = 0; i < r.n_b(); ++i) ok = ok && r.neighbors_of_b(i).count() == p;
            ok = ok && is_k22_free(r);
            built += 3;
        }
    }
    detail = std::to_string(built) + " gadgets checked";
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Star lemma: 100 seeded instances per h in {1,2,3} satisfying the
//    hypotheses all yield 2*(delta-h+1) disjoint stars per side.
bool criterion5(std::string& detail) {
    bool ok = true;
    int runs = 0, failures = 0;
    for (int h : {1, 2, 3}) {
        for (int i = 0; i < 100; ++i) {
            std::uint64_t seed = h * 10000 + i;
            Rng rng(seed);
            int min_m = std::max(50, (6 * h + 6) * (h + 1) + 1);
            int m = rng.in_range(min_m, 200);
            int max_delta = std::min(h + 1, (m - 1) / (6 * h + 6));
            int delta = rng.in_range(h, std::max(h, max_delta));
            BipartiteGraph g = star_instance(m, delta, seed * 31 + 7);
            VertexSet u1 = VertexSet::full(Side::A, m), u2 = VertexSet::full(Side::B, m);
            try {
                auto [s1, s2] = find_stars(h, u1, u2, g);
                int want = 2 * (delta - h + 1);
                bool good = static_cast<int>(s1.size()) >= want &&
                            static_cast<int>(s2.size()) >= want;
                // Disjointness across both families.
                std::vector<char> used_a(m, 0), used_b(m, 0);
                auto mark = [&](const Star& st) {
                    auto& cent = st.center.side == Side::A ? used_a : used_b;
                    auto& leaf = st.center.side == Side::A ? used_b : used_a;
                    if (cent[st.center.index]) good = false;
                    cent[st.center.index] = 1;
                    st.leaves.members.for_each([&](int w) {
                        if (leaf[w]) good = false;
                        leaf[w] = 1;
                    });
                };
                for (const Star& st : s1) mark(st);
                for (const Star& st : s2) mark(st);
                if (!good) ++failures;
                ok = ok && good;
            } catch (const std::exception&) {
                ++failures;
                ok = false;
            }
            ++runs;
        }
    }
    detail = std::to_string(runs) + " instances, " + std::to_string(failures) + " failures";
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Extremal tiler at scale: structured YES instances for (1,2) up to
//    k = 100 (n = 300) tile via the constructive route, verified, <= 10 s.
bool criterion6(std::string& detail) {
    bool ok = true;
    std::ostringstream log;
    double worst = 0;
    auto run_one = [&](const BipartiteGraph& g, const TilerConfig& cfg, const std::string& name) {
        auto start = std::chrono::steady_clock::now();
        TileResult r = tile(g, 1, 2, cfg);
        double secs = seconds_since(start);
        worst = std::max(worst, secs);
        bool good = r.status == TileStatus::Found && r.route == TileRoute::Extremal &&
                    verify_factor(g, 1, 2, r.factor) && secs <= 10.0;
        if (!good) {
            ok = false;
            log << "FAIL " << name << " (status/route/verify/time); ";
        }
    };
    for (int k : {2, 4, 10, 20, 50, 100})
        run_one(structured_even_instance(1, 2, k, 40 + k, false), {}, "even-k" + std::to_string(k));
    for (int k : {3, 5, 11, 21, 51, 99})
        run_one(structured_odd_instance(1, 2, k, 80 + k, false), {}, "odd-k" + std::to_string(k));
    for (int k : {20, 40, 100})
        run_one(structured_even_instance(1, 2, k, 120 + k, true), TilerConfig{0.05, 24},
                "even-oversized-k" + std::to_string(k));
    for (int k : {45, 71, 99})
        run_one(structured_odd_instance(1, 2, k, 160 + k, true), {},
                "odd-specials-k" + std::to_string(k));
    log << "18 instances, worst " << worst << "s (limit 10)";
    detail = log.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Counting certificate: r1 intervals of the odd-mid constructions contain
//    no integer and match the hand-computed rationals exactly.
bool criterion7(std::string& detail) {
    bool ok = true;
    std::ostringstream log;
    for (ConstructionParams p : {ConstructionParams{1, 3, 3}, ConstructionParams{2, 4, 3}}) {
        LabeledConstruction c = build_odd_mid(p);
        Obstruction o = obstruction_for(c);
        int l = (p.k - 1) / 2;
        Rational lo_hand(l * (p.s + p.t) + p.s + 1, p.s + p.t);
        Rational hi_hand(l * (p.s + p.t) + p.t - 1, p.s + p.t);
        bool endpoints = o.r1_lo == lo_hand && o.r1_hi == hi_hand;
        bool no_integer = o.r1_hi.floor() < o.r1_lo.ceil();
        bool certified = check_obstruction(c.graph, o, p.s, p.t);
        ok = ok && endpoints && no_integer && certified;
        log << "(" << p.s << "," << p.t << "," << p.k << "): [" << o.r1_lo.str() << ","
            << o.r1_hi.str() << "] endpoints=" << (endpoints ? "ok" : "BAD")
            << " no-integer=" << (no_integer ? "ok" : "BAD") << "; ";
    }
    detail = log.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Determinism: a fixed-seed sweep is byte-identical across two runs,
//    in-process and (when the binary path is supplied) across processes.
bool criterion8(std::string& detail, const std::string& kst_bin) {
    SweepParams p{1, 2, 2, 3, 5, 424242, false, SearchBudget::unlimited()};
    std::string a = sweep_csv(run_sweep(p));
    std::string b = sweep_csv(run_sweep(p));
    bool ok = a == b && !a.empty();
    std::string process_note = "in-process only";
    if (!kst_bin.empty()) {
        std::string cmd = kst_bin +
                          " sweep --s 1 --t 2 --k-min 2 --k-max 3 --trials 5 --seed 424242 --out ";
        std::string f1 = "acceptance_sweep_1.csv", f2 = "acceptance_sweep_2.csv";
        int rc1 = std::system((cmd + f1 + " > /dev/null").c_str());
        int rc2 = std::system((cmd + f2 + " > /dev/null").c_str());
        if (rc1 != 0 || rc2 != 0) {
            ok = false;
            process_note = "CLI runs failed";
        } else {
            std::string out1 = read_file(f1), out2 = read_file(f2);
            ok = ok && out1 == out2 && out1 == a;
            process_note = out1 == out2 ? "two CLI runs byte-identical" : "CLI runs DIFFER";
        }
        std::remove(f1.c_str());
        std::remove(f2.c_str());
    }
    detail = std::to_string(a.size()) + " bytes, " + process_note;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string kst_bin;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (arg == "--kst-bin" && i + 1 < argc)
            kst_bin = argv[++i];
    }

    std::vector<Criterion> criteria{
        {1, "lower-bound constructions certified and refuted by search", criterion1},
        {2, "random above-threshold instances all tile", criterion2},
        {3, "solver agrees with the brute-force oracle", criterion3},
        {4, "gadget regularity, C4-freeness and degree multisets", criterion4},
        {5, "disjoint star families under the lemma hypotheses", criterion5},
        {6, "constructive tiler handles n=300 extremal instances", criterion6},
        {7, "copy-count integrality intervals are exact", criterion7},
        {8, "fixed-seed sweep output is byte-identical",
         [&kst_bin](std::string& d) { return criterion8(d, kst_bin); }},
    };

    bool all_ok = true;
    for (Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
