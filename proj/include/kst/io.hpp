#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kst/bigraph.hpp"
#include "kst/extremal.hpp"
#include "kst/solver.hpp"

namespace kst {

enum class GraphFormat { Bge, Json };

// Flat edge-list form of a bipartite graph as it appears on disk.
struct GraphData {
    int n_a = 0, n_b = 0;
    std::vector<std::pair<int, int>> edges;  // 0-based (a, b), kept sorted
};

GraphData to_graph_data(const BipartiteGraph& g);
BipartiteGraph to_graph(const GraphData& d);

// Text format:
//   bge <n_a> <n_b> <m>
//   e <a> <b>        (m sorted edge lines)
std::string write_bge(const GraphData& d);
// Parse errors carry 1-based line numbers.
GraphData parse_bge(const std::string& text);

std::string write_graph_json(const GraphData& d);
GraphData parse_graph_json(const std::string& text);

std::string write_graph(const GraphData& d, GraphFormat f);
// Sniffs the format from content ('{' starts JSON).
GraphData parse_graph(const std::string& text);

// Construction sidecar: block labels plus the claimed minimum degree.
struct ConstructionSidecar {
    std::string kind;  // even | odd-mid | odd-succ
    int s = 0, t = 0, k = 0;
    int claimed_min_degree = 0;
    std::vector<int> a1, a2, a_star, b1, b2, b_star;
};

ConstructionSidecar to_sidecar(const LabeledConstruction& c);
std::string write_sidecar_json(const ConstructionSidecar& s);
ConstructionSidecar parse_sidecar_json(const std::string& text);
// Rebuild the labeled construction from a graph and its sidecar.
LabeledConstruction from_sidecar(BipartiteGraph g, const ConstructionSidecar& sc);

std::string write_factor_json(int s, int t, const Factor& f);
// Returns (s, t, factor).
std::pair<std::pair<int, int>, Factor> parse_factor_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kst
