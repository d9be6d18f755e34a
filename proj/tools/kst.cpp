// kst: build, check, tile, certify and sweep bipartite K_{s,t}-factor
// instances from the command line.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "kst/c4free.hpp"
#include "kst/extremal.hpp"
#include "kst/instances.hpp"
#include "kst/io.hpp"
#include "kst/solver.hpp"
#include "kst/tiler.hpp"

namespace {

using namespace kst;

std::string verdict_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::NoFactor: return "NoFactor";
        case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

std::string verdict_name(TileStatus s) {
    switch (s) {
        case TileStatus::Found: return "Found";
        case TileStatus::NoFactor: return "NoFactor";
        case TileStatus::Unknown: return "Unknown";
    }
    return "?";
}

GraphFormat parse_format(const std::string& f) {
    if (f == "bge") return GraphFormat::Bge;
    if (f == "json") return GraphFormat::Json;
    throw CLI::ValidationError("--format must be bge or json");
}

long long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

struct ConstructArgs {
    std::string kind;
    int s = 1, t = 2, k = 2;
    int m = 7, deg = 0;
    std::string out = "graph";
    std::string format = "bge";
};

int run_construct(const ConstructArgs& a) {
    GraphFormat fmt = parse_format(a.format);
    std::string ext = fmt == GraphFormat::Bge ? ".bge" : ".json";
    if (a.kind == "P" || a.kind == "Q" || a.kind == "R") {
        GadgetKind kind = a.kind == "P" ? GadgetKind::P : a.kind == "Q" ? GadgetKind::Q : GadgetKind::R;
        BipartiteGraph g = build_gadget({kind, a.m, a.deg});
        write_file(a.out + ext, write_graph(to_graph_data(g), fmt));
        std::cout << "kind=" << a.kind << " m=" << a.m << " deg=" << a.deg << " n_a=" << g.n_a()
                  << " n_b=" << g.n_b() << " edges=" << g.edge_count()
                  << " k22_free=" << (is_k22_free(g) ? "true" : "false") << "\n";
        std::cout << "wrote " << a.out + ext << "\n";
        return 0;
    }

    ConstructionParams params{a.s, a.t, a.k};
    LabeledConstruction c = a.kind == "even"      ? build_even(params)
                            : a.kind == "odd-mid" ? build_odd_mid(params)
                                                  : build_odd_succ(params);
    write_file(a.out + ext, write_graph(to_graph_data(c.graph), fmt));
    write_file(a.out + ".labels.json", write_sidecar_json(to_sidecar(c)));
    std::cout << "case=" << case_name(c.kind) << " s=" << a.s << " t=" << a.t << " k=" << a.k
              << " n=" << c.graph.n_a() << " min_degree=" << c.claimed_min_degree
              << " threshold=" << threshold(a.s, a.t, a.k) << "\n";
    std::cout << "wrote " << a.out + ext << " and " << a.out + ".labels.json\n";
    return 0;
}

struct CheckArgs {
    std::string graph_file;
    int s = 1, t = 2;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    std::string factor_out;
};

int run_check(const CheckArgs& a) {
    BipartiteGraph g = to_graph(parse_graph(read_file(a.graph_file)));
    auto start = std::chrono::steady_clock::now();
    SearchResult r = has_factor(g, a.s, a.t, SearchBudget{a.budget_nodes, a.budget_secs});
    long long ms = elapsed_ms_since(start);
    std::cout << "file=" << a.graph_file << " s=" << a.s << " t=" << a.t << " min_degree="
              << (g.n_a() + g.n_b() > 0 ? std::to_string(min_degree(g)) : "-")
              << " verdict=" << verdict_name(r.status) << " nodes=" << r.nodes
              << " elapsed_ms=" << ms << "\n";
    if (r.status == SearchStatus::Found) {
        std::cout << "copies=" << r.factor.copies.size() << "\n";
        if (!a.factor_out.empty()) {
            write_file(a.factor_out, write_factor_json(a.s, a.t, r.factor));
            auto [st, reloaded] = parse_factor_json(read_file(a.factor_out));
            if (!verify_factor(g, st.first, st.second, reloaded))
                throw std::logic_error("reloaded factor fails verification");
            std::cout << "wrote " << a.factor_out << " (re-verified on load)\n";
        }
    }
    return 0;
}

struct TileArgs {
    std::string graph_file;
    int s = 1, t = 2;
    double alpha = 0.01;
    int fallback_cap = 24;
    std::string factor_out;
};

int run_tile(const TileArgs& a) {
    BipartiteGraph g = to_graph(parse_graph(read_file(a.graph_file)));
    TilerConfig cfg{a.alpha, a.fallback_cap};
    auto start = std::chrono::steady_clock::now();
    TileResult r = tile(g, a.s, a.t, cfg);
    long long ms = elapsed_ms_since(start);
    std::cout << "file=" << a.graph_file << " s=" << a.s << " t=" << a.t << " min_degree="
              << (g.n_a() + g.n_b() > 0 ? std::to_string(min_degree(g)) : "-")
              << " verdict=" << verdict_name(r.status)
              << " route=" << (r.route == TileRoute::Extremal   ? "extremal"
                               : r.route == TileRoute::Fallback ? "fallback"
                                                                : "precheck")
              << " elapsed_ms=" << ms << "\n";
    if (!r.note.empty()) std::cout << "note=" << r.note << "\n";
    if (r.status == TileStatus::Found) {
        std::cout << "copies=" << r.factor.copies.size() << "\n";
        if (!a.factor_out.empty()) {
            write_file(a.factor_out, write_factor_json(a.s, a.t, r.factor));
            // Round-trip the factor file and re-verify it against the graph.
            auto [st, reloaded] = parse_factor_json(read_file(a.factor_out));
            if (!verify_factor(g, st.first, st.second, reloaded))
                throw std::logic_error("reloaded factor fails verification");
            std::cout << "wrote " << a.factor_out << " (re-verified on load)\n";
        }
    }
    return 0;
}

struct CertifyArgs {
    std::string graph_file;
    std::string sidecar;
    int s = 0, t = 0, k = 0;
    std::string kind;
};

int run_certify(const CertifyArgs& a) {
    std::string sidecar_path = a.sidecar;
    if (sidecar_path.empty()) {
        std::string base = a.graph_file;
        auto dot = base.find_last_of('.');
        if (dot != std::string::npos) base = base.substr(0, dot);
        sidecar_path = base + ".labels.json";
    }
    ConstructionSidecar sc = parse_sidecar_json(read_file(sidecar_path));
    if (!a.kind.empty() && a.kind != sc.kind) {
        std::cout << "certified=false reason=case-mismatch sidecar=" << sc.kind
                  << " requested=" << a.kind << "\n";
        return 0;
    }
    if (a.k > 0 && a.k != sc.k) {
        std::cout << "certified=false reason=k-mismatch sidecar=" << sc.k << " requested=" << a.k
                  << "\n";
        return 0;
    }
    int s = a.s > 0 ? a.s : sc.s;
    int t = a.t > 0 ? a.t : sc.t;
    BipartiteGraph g = to_graph(parse_graph(read_file(a.graph_file)));
    LabeledConstruction c = from_sidecar(std::move(g), sc);
    Obstruction o = obstruction_for(c);
    bool ok = check_obstruction(c.graph, o, s, t);
    std::cout << "file=" << a.graph_file << " case=" << sc.kind << " s=" << s << " t=" << t
              << " certified=" << (ok ? "true" : "false");
    if (o.kind == ObstructionKind::CountingIntegrality)
        std::cout << " r1_interval=[" << o.r1_lo.str() << "," << o.r1_hi.str() << "]";
    std::cout << "\n";
    return 0;
}

struct SweepArgs {
    int s = 1, t = 2;
    int k_min = 2, k_max = 3;
    int trials = 5;
    std::uint64_t seed = 1;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    bool timing = false;
    std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
    SweepParams p{a.s,    a.t,      a.k_min, a.k_max,
                  a.trials, a.seed, a.timing, SearchBudget{a.budget_nodes, a.budget_secs}};
    std::string csv = sweep_csv(run_sweep(p));
    if (a.out.empty())
        std::cout << csv;
    else {
        write_file(a.out, csv);
        std::cout << "wrote " << a.out << "\n";
    }
    return 0;
}

struct RandomArgs {
    int n = 6;
    double density = 0.5;
    int floor = -1;
    std::uint64_t seed = 1;
    std::string out = "random";
    std::string format = "bge";
};

int run_random(const RandomArgs& a) {
    GraphFormat fmt = parse_format(a.format);
    BipartiteGraph g = a.floor >= 0 ? random_with_min_degree(a.n, a.density, a.floor, a.seed)
                                    : random_bipartite(a.n, a.n, a.density, a.seed);
    std::string ext = fmt == GraphFormat::Bge ? ".bge" : ".json";
    write_file(a.out + ext, write_graph(to_graph_data(g), fmt));
    std::cout << "n=" << a.n << " density=" << a.density << " seed=" << a.seed << " min_degree="
              << (a.n > 0 ? std::to_string(min_degree(g)) : "-") << " edges=" << g.edge_count()
              << "\n";
    std::cout << "wrote " << a.out + ext << "\n";
    return 0;
}

struct StatsArgs {
    std::string graph_file;
    int s = 0, t = 0;
};

int run_stats(const StatsArgs& a) {
    BipartiteGraph g = to_graph(parse_graph(read_file(a.graph_file)));
    std::cout << "file=" << a.graph_file << " n_a=" << g.n_a() << " n_b=" << g.n_b()
              << " edges=" << g.edge_count();
    if (g.n_a() + g.n_b() > 0) std::cout << " min_degree=" << min_degree(g);
    std::cout << " k22_free=" << (is_k22_free(g) ? "true" : "false");
    if (a.s > 0 && a.t > a.s && g.n_a() == g.n_b() && g.n_a() % (a.s + a.t) == 0) {
        int k = g.n_a() / (a.s + a.t);
        std::cout << " k=" << k << " threshold=" << threshold(a.s, a.t, k);
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite K_{s,t}-factor constructions, certificates and tilings"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a lower-bound construction or gadget");
    construct->add_option("kind", ca.kind, "even | odd-mid | odd-succ | P | Q | R")
        ->required()
        ->check(CLI::IsMember({"even", "odd-mid", "odd-succ", "P", "Q", "R"}));
    construct->add_option("--s", ca.s, "tile part size s");
    construct->add_option("--t", ca.t, "tile part size t");
    construct->add_option("--k", ca.k, "scale: n = k(s+t)");
    construct->add_option("--m", ca.m, "gadget class size");
    construct->add_option("--p,--q", ca.deg, "gadget regularity");
    construct->add_option("--out", ca.out, "output path prefix");
    construct->add_option("--format", ca.format, "bge | json");

    CheckArgs ch;
    CLI::App* check = app.add_subcommand("check", "exact K_{s,t}-factor decision");
    check->add_option("graph", ch.graph_file)->required();
    check->add_option("--s", ch.s)->required();
    check->add_option("--t", ch.t)->required();
    check->add_option("--budget-nodes", ch.budget_nodes, "0 = unlimited");
    check->add_option("--budget-secs", ch.budget_secs, "0 = unlimited");
    check->add_option("--factor-out", ch.factor_out, "write the witness factor here");

    TileArgs ti;
    CLI::App* tile_cmd = app.add_subcommand("tile", "constructive tiling with exact fallback");
    tile_cmd->add_option("graph", ti.graph_file)->required();
    tile_cmd->add_option("--s", ti.s)->required();
    tile_cmd->add_option("--t", ti.t)->required();
    tile_cmd->add_option("--alpha", ti.alpha, "classification parameter");
    tile_cmd->add_option("--fallback-cap", ti.fallback_cap, "max n for exact fallback");
    tile_cmd->add_option("--factor-out", ti.factor_out);

    CertifyArgs ce;
    CLI::App* certify = app.add_subcommand("certify", "validate a no-factor certificate");
    certify->add_option("graph", ce.graph_file)->required();
    certify->add_option("--sidecar", ce.sidecar, "label sidecar (default: <graph>.labels.json)");
    certify->add_option("--case", ce.kind, "expected case");
    certify->add_option("--s", ce.s);
    certify->add_option("--t", ce.t);
    certify->add_option("--k", ce.k);

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "constructions vs random instances over a k-range");
    sweep->add_option("--s", sw.s)->required();
    sweep->add_option("--t", sw.t)->required();
    sweep->add_option("--k-min", sw.k_min);
    sweep->add_option("--k-max", sw.k_max);
    sweep->add_option("--trials", sw.trials);
    sweep->add_option("--seed", sw.seed);
    sweep->add_option("--budget-nodes", sw.budget_nodes);
    sweep->add_option("--budget-secs", sw.budget_secs);
    sweep->add_flag("--timing", sw.timing, "fill elapsed_ms with wall-clock times (non-reproducible)");
    sweep->add_option("--out", sw.out, "write CSV here instead of stdout");

    RandomArgs ra;
    CLI::App* random_cmd = app.add_subcommand("random", "seeded random bipartite graph");
    random_cmd->add_option("--n", ra.n)->required();
    random_cmd->add_option("--density", ra.density);
    random_cmd->add_option("--min-degree-floor", ra.floor, "raise min degree to this floor");
    random_cmd->add_option("--seed", ra.seed);
    random_cmd->add_option("--out", ra.out);
    random_cmd->add_option("--format", ra.format);

    StatsArgs st;
    CLI::App* stats = app.add_subcommand("stats", "graph statistics");
    stats->add_option("graph", st.graph_file)->required();
    stats->add_option("--s", st.s);
    stats->add_option("--t", st.t);

    try {
        app.parse(argc, argv);
        if (*construct) return run_construct(ca);
        if (*check) return run_check(ch);
        if (*tile_cmd) return run_tile(ti);
        if (*certify) return run_certify(ce);
        if (*sweep) return run_sweep_cmd(sw);
        if (*random_cmd) return run_random(ra);
        if (*stats) return run_stats(st);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
