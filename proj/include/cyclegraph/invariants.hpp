#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclegraph/gamma.hpp"

namespace cyclegraph {

/// Plain undirected simple graph.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    static Graph from_gamma(const GammaGraph& gamma);
};

/// Every graph-theoretic quantity the audit compares against closed forms.
/// diameter is empty when the graph is disconnected; girth is empty when the
/// graph is acyclic (infinite girth).
struct InvariantSummary {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<int> degree_sequence;  // ascending
    int min_degree = 0;
    int max_degree = 0;
    int pendant_count = 0;
    bool connected = false;
    std::optional<int> diameter;
    std::optional<int> girth;
    bool bipartite = false;
    bool tree = false;
    bool regular = false;
    bool eulerian = false;
    bool path_graph = false;
    bool cycle_graph = false;
    bool star_graph = false;
    bool complete_graph = false;
};

InvariantSummary summarize(const Graph& g);
InvariantSummary summarize(const GammaGraph& gamma);

/// BFS shortest-path length; empty when unreachable.
std::optional<int> distance(const Graph& g, int u, int v);
std::optional<int> distance(const GammaGraph& gamma, int u, int v);

/// True when a simple cycle of exactly `length` passes through `v`.
bool has_cycle_through(const Graph& g, int v, int length);

}  // namespace cyclegraph
