#pragma once

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toid {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted so that everything downstream is deterministic.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;  // optional display names; empty or size n

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(int v) const { return adj[v].size() == 1; }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    int edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj) twice += nb.size();
        return static_cast<int>(twice / 2);
    }
    std::string label(int v) const {
        return labels.empty() ? std::to_string(v) : labels[v];
    }
};

// A Graph whose invariants (connected, acyclic) were checked at build time.
struct Tree : Graph {};

inline void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument(std::string(what) + ": vertex id " +
                                    std::to_string(v) + " out of range [0," +
                                    std::to_string(g.n) + ")");
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("make_graph: need at least one vertex");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        check_vertex(g, u, "make_graph");
        check_vertex(g, v, "make_graph");
        if (u == v)
            throw std::invalid_argument("make_graph: self-loop at vertex " +
                                        std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("make_graph: duplicate edge at vertex " +
                                        std::to_string(v));
    }
    return g;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Vertices in BFS order from src; visits neighbors in ascending id order.
inline std::vector<int> bfs_order(const Graph& g, int src) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> order;
    order.reserve(g.n);
    std::queue<int> q;
    seen[src] = 1;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return order;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return static_cast<int>(bfs_order(g, 0).size()) == g.n;
}

inline Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("make_tree: a tree on " + std::to_string(n) +
                                    " vertices needs exactly " + std::to_string(n - 1) +
                                    " edges, got " + std::to_string(edges.size()));
    Tree t;
    static_cast<Graph&>(t) = make_graph(n, edges);
    if (!is_connected(t))
        throw std::invalid_argument("make_tree: graph is not connected");
    return t;  // connected with n-1 edges, hence acyclic
}

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

// Text format: one "u v" pair per line, 0-based ids; '#' starts a comment,
// blank lines are skipped. Vertex count is max id + 1. Empty input is the
// one-vertex tree.
inline Tree parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected two vertex ids");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing token '" + rest + "'");
        if (u < 0 || v < 0 || u > 1000000000 || v > 1000000000)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": vertex id out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) return make_tree(1, {});
    return make_tree(max_id + 1, edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : edge_list(g)) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace toid
