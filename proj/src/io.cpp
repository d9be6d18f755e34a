#include "kst/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kst {

using nlohmann::json;

GraphData to_graph_data(const BipartiteGraph& g) {
    GraphData d{g.n_a(), g.n_b(), {}};
    d.edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int a = 0; a < g.n_a(); ++a)
        g.neighbors_of_a(a).for_each([&](int b) { d.edges.emplace_back(a, b); });
    return d;  // already sorted: ascending a, then b
}

BipartiteGraph to_graph(const GraphData& d) {
    if (d.n_a < 0 || d.n_b < 0) throw std::invalid_argument("graph: negative class size");
    BipartiteGraph g(d.n_a, d.n_b);
    for (auto [a, b] : d.edges) {
        if (g.has_edge(a, b)) throw std::invalid_argument("graph: duplicate edge");
        g.add_edge(a, b);
    }
    return g;
}

std::string write_bge(const GraphData& d) {
    std::ostringstream os;
    os << "bge " << d.n_a << ' ' << d.n_b << ' ' << d.edges.size() << '\n';
    std::vector<std::pair<int, int>> edges = d.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) os << "e " << a << ' ' << b << '\n';
    return os.str();
}

GraphData parse_bge(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    GraphData d;
    long long m = -1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (m < 0) {
            if (tag != "bge") fail("expected header 'bge <n_a> <n_b> <m>'");
            if (!(ls >> d.n_a >> d.n_b >> m) || d.n_a < 0 || d.n_b < 0 || m < 0)
                fail("malformed header counts");
        } else {
            if (tag != "e") fail("expected edge line 'e <a> <b>'");
            int a, b;
            if (!(ls >> a >> b)) fail("malformed edge line");
            if (a < 0 || a >= d.n_a || b < 0 || b >= d.n_b) fail("edge index out of range");
            d.edges.emplace_back(a, b);
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
    }
    if (m < 0) throw std::invalid_argument("line 1: missing 'bge' header");
    if (static_cast<long long>(d.edges.size()) != m)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": header promises " +
                                    std::to_string(m) + " edges, found " +
                                    std::to_string(d.edges.size()));
    std::sort(d.edges.begin(), d.edges.end());
    for (std::size_t i = 1; i < d.edges.size(); ++i)
        if (d.edges[i] == d.edges[i - 1]) throw std::invalid_argument("duplicate edge in file");
    return d;
}

std::string write_graph_json(const GraphData& d) {
    json j;
    j["n_a"] = d.n_a;
    j["n_b"] = d.n_b;
    json edges = json::array();
    std::vector<std::pair<int, int>> sorted = d.edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto [a, b] : sorted) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

GraphData parse_graph_json(const std::string& text) {
    json j = json::parse(text);
    GraphData d;
    d.n_a = j.at("n_a").get<int>();
    d.n_b = j.at("n_b").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [a, b] pairs");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || a >= d.n_a || b < 0 || b >= d.n_b)
            throw std::invalid_argument("edge index out of range");
        d.edges.emplace_back(a, b);
    }
    std::sort(d.edges.begin(), d.edges.end());
    for (std::size_t i = 1; i < d.edges.size(); ++i)
        if (d.edges[i] == d.edges[i - 1]) throw std::invalid_argument("duplicate edge in file");
    return d;
}

std::string write_graph(const GraphData& d, GraphFormat f) {
    return f == GraphFormat::Bge ? write_bge(d) : write_graph_json(d);
}

GraphData parse_graph(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
    return parse_bge(text);
}

ConstructionSidecar to_sidecar(const LabeledConstruction& c) {
    ConstructionSidecar sc;
    sc.kind = case_name(c.kind);
    sc.s = c.params.s;
    sc.t = c.params.t;
    sc.k = c.params.k;
    sc.claimed_min_degree = c.claimed_min_degree;
    sc.a1 = c.a1.indices();
    sc.a2 = c.a2.indices();
    sc.a_star = c.a_star.indices();
    sc.b1 = c.b1.indices();
    sc.b2 = c.b2.indices();
    sc.b_star = c.b_star.indices();
    return sc;
}

std::string write_sidecar_json(const ConstructionSidecar& s) {
    json j;
    j["case"] = s.kind;
    j["s"] = s.s;
    j["t"] = s.t;
    j["k"] = s.k;
    j["claimed_min_degree"] = s.claimed_min_degree;
    j["blocks"] = {{"a1", s.a1},     {"a2", s.a2}, {"a_star", s.a_star},
                   {"b1", s.b1},     {"b2", s.b2}, {"b_star", s.b_star}};
    return j.dump(2) + "\n";
}

ConstructionSidecar parse_sidecar_json(const std::string& text) {
    json j = json::parse(text);
    ConstructionSidecar s;
    s.kind = j.at("case").get<std::string>();
    s.s = j.at("s").get<int>();
    s.t = j.at("t").get<int>();
    s.k = j.at("k").get<int>();
    s.claimed_min_degree = j.at("claimed_min_degree").get<int>();
    const json& b = j.at("blocks");
    s.a1 = b.at("a1").get<std::vector<int>>();
    s.a2 = b.at("a2").get<std::vector<int>>();
    s.a_star = b.at("a_star").get<std::vector<int>>();
    s.b1 = b.at("b1").get<std::vector<int>>();
    s.b2 = b.at("b2").get<std::vector<int>>();
    s.b_star = b.at("b_star").get<std::vector<int>>();
    return s;
}

LabeledConstruction from_sidecar(BipartiteGraph g, const ConstructionSidecar& sc) {
    ConstructionCase kind;
    if (sc.kind == "even")
        kind = ConstructionCase::Even;
    else if (sc.kind == "odd-mid")
        kind = ConstructionCase::OddMid;
    else if (sc.kind == "odd-succ")
        kind = ConstructionCase::OddSucc;
    else
        throw std::invalid_argument("sidecar: unknown case '" + sc.kind + "'");
    int na = g.n_a(), nb = g.n_b();
    LabeledConstruction c{std::move(g),
                          ConstructionParams{sc.s, sc.t, sc.k},
                          kind,
                          VertexSet::of(Side::A, na, sc.a1),
                          VertexSet::of(Side::A, na, sc.a2),
                          VertexSet::of(Side::A, na, sc.a_star),
                          VertexSet::of(Side::B, nb, sc.b1),
                          VertexSet::of(Side::B, nb, sc.b2),
                          VertexSet::of(Side::B, nb, sc.b_star),
                          sc.claimed_min_degree};
    return c;
}

std::string write_factor_json(int s, int t, const Factor& f) {
    json j;
    j["s"] = s;
    j["t"] = t;
    json copies = json::array();
    for (const KstCopy& c : f.copies) {
        json jc;
        jc["orientation"] = c.orientation == Orientation::TSideInA ? "t-in-a" : "t-in-b";
        jc["s_side"] = c.s_side;
        jc["t_side"] = c.t_side;
        copies.push_back(std::move(jc));
    }
    j["copies"] = std::move(copies);
    return j.dump(2) + "\n";
}

std::pair<std::pair<int, int>, Factor> parse_factor_json(const std::string& text) {
    json j = json::parse(text);
    int s = j.at("s").get<int>(), t = j.at("t").get<int>();
    Factor f;
    for (const auto& jc : j.at("copies")) {
        KstCopy c;
        std::string o = jc.at("orientation").get<std::string>();
        if (o == "t-in-a")
            c.orientation = Orientation::TSideInA;
        else if (o == "t-in-b")
            c.orientation = Orientation::TSideInB;
        else
            throw std::invalid_argument("factor: unknown orientation '" + o + "'");
        c.s_side = jc.at("s_side").get<std::vector<int>>();
        c.t_side = jc.at("t_side").get<std::vector<int>>();
        f.copies.push_back(std::move(c));
    }
    return {{s, t}, std::move(f)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace kst
