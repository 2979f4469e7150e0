#include "cyclegraph/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclegraph {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.vertex_count = n;
    g.adj.resize(n);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) throw std::invalid_argument("graph: bad edge");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

Graph Graph::from_gamma(const GammaGraph& gamma) {
    return from_edges(static_cast<int>(gamma.vertices.size()), gamma.edges);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count, -1);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : g.adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

// Shortest cycle through BFS: every non-tree edge closes a walk of length
// dist[u]+dist[v]+1 containing a cycle no longer than itself; rooting at a
// vertex of a shortest cycle attains the girth, so the minimum over all roots
// is exact.
std::optional<int> compute_girth(const Graph& g) {
    int best = -1;
    for (int src = 0; src < g.vertex_count; ++src) {
        std::vector<int> dist(g.vertex_count, -1), parent(g.vertex_count, -1);
        dist[src] = 0;
        std::vector<int> queue{src};
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : g.adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace

InvariantSummary summarize(const Graph& g) {
    InvariantSummary s;
    s.vertex_count = g.vertex_count;
    s.edge_count = static_cast<int>(g.edges.size());
    s.degree_sequence.reserve(g.vertex_count);
    for (const auto& nbrs : g.adj) s.degree_sequence.push_back(static_cast<int>(nbrs.size()));
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    if (g.vertex_count > 0) {
        s.min_degree = s.degree_sequence.front();
        s.max_degree = s.degree_sequence.back();
    }
    s.pendant_count = static_cast<int>(
        std::count(s.degree_sequence.begin(), s.degree_sequence.end(), 1));
    s.regular = g.vertex_count > 0 && s.min_degree == s.max_degree;

    if (g.vertex_count > 0) {
        auto dist0 = bfs_distances(g, 0);
        s.connected = std::find(dist0.begin(), dist0.end(), -1) == dist0.end();
    }
    if (s.connected) {
        int diam = 0;
        for (int src = 0; src < g.vertex_count; ++src) {
            auto dist = bfs_distances(g, src);
            diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
        }
        s.diameter = diam;
    }
    s.girth = compute_girth(g);

    // 2-coloring; vacuously bipartite when edgeless.
    s.bipartite = true;
    {
        std::vector<int> color(g.vertex_count, -1);
        for (int src = 0; src < g.vertex_count && s.bipartite; ++src) {
            if (color[src] >= 0) continue;
            color[src] = 0;
            std::vector<int> queue{src};
            for (size_t head = 0; head < queue.size() && s.bipartite; ++head) {
                int x = queue[head];
                for (int y : g.adj[x]) {
                    if (color[y] < 0) {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if (color[y] == color[x]) {
                        s.bipartite = false;
                        break;
                    }
                }
            }
        }
    }

    s.tree = s.connected && s.edge_count == s.vertex_count - 1;
    s.eulerian = s.connected;
    for (int d : s.degree_sequence)
        if (d % 2 != 0) s.eulerian = false;

    // Shape conventions: a single vertex is a path and complete but neither a
    // star nor a cycle; two vertices with an edge count as both path and star.
    if (g.vertex_count == 1) {
        s.path_graph = true;
    } else {
        s.path_graph = s.connected && s.pendant_count == 2 &&
                       std::count(s.degree_sequence.begin(), s.degree_sequence.end(), 2) ==
                           g.vertex_count - 2;
    }
    s.cycle_graph = s.connected && g.vertex_count >= 3 && s.regular && s.min_degree == 2;
    s.star_graph = s.connected && g.vertex_count >= 2 && s.max_degree == g.vertex_count - 1 &&
                   s.edge_count == g.vertex_count - 1;
    s.complete_graph =
        g.vertex_count >= 1 && s.edge_count == g.vertex_count * (g.vertex_count - 1) / 2 &&
        (g.vertex_count == 1 || s.min_degree == g.vertex_count - 1);
    return s;
}

InvariantSummary summarize(const GammaGraph& gamma) {
    return summarize(Graph::from_gamma(gamma));
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("distance: vertex out of range");
    auto dist = bfs_distances(g, u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::optional<int> distance(const GammaGraph& gamma, int u, int v) {
    return distance(Graph::from_gamma(gamma), u, v);
}

namespace {

bool cycle_dfs(const Graph& g, int home, int cur, int remaining, std::vector<char>& used) {
    if (remaining == 0) return cur == home;
    for (int nxt : g.adj[cur]) {
        if (nxt == home && remaining == 1) return true;
        if (used[nxt] || nxt == home) continue;
        used[nxt] = 1;
        if (cycle_dfs(g, home, nxt, remaining - 1, used)) return true;
        used[nxt] = 0;
    }
    return false;
}

}  // namespace

bool has_cycle_through(const Graph& g, int v, int length) {
    if (length < 3 || v < 0 || v >= g.vertex_count) return false;
    std::vector<char> used(g.vertex_count, 0);
    used[v] = 1;
    return cycle_dfs(g, v, v, length, used);
}

}  // namespace cyclegraph
