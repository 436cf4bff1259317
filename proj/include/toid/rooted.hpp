#pragma once

#include "toid/tree.hpp"

namespace toid {

// Parent/depth arrays for a tree rooted at `root`. `order` is a BFS order,
// so iterating it in reverse visits children before parents.
struct RootedView {
    int root = 0;
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> order;
};

inline RootedView root_at(const Tree& t, int root) {
    check_vertex(t, root, "root_at");
    RootedView rv;
    rv.root = root;
    rv.parent.assign(t.n, -1);
    rv.depth.assign(t.n, 0);
    rv.order = bfs_order(t, root);
    for (int v : rv.order)
        for (int w : t.adj[v])
            if (w != rv.parent[v]) {
                rv.parent[w] = v;
                rv.depth[w] = rv.depth[v] + 1;
            }
    return rv;
}

// A tree rebuilt on a subset of vertices, relabeled densely in increasing
// old-id order. old_id maps new ids back; new_id is -1 for dropped vertices.
struct Reindexed {
    Tree tree;
    std::vector<int> old_id;
    std::vector<int> new_id;
};

inline Reindexed induced_subtree(const Tree& t, const std::vector<char>& keep,
                                 const char* what) {
    Reindexed r;
    r.new_id.assign(t.n, -1);
    for (int v = 0; v < t.n; ++v)
        if (keep[v]) {
            r.new_id[v] = static_cast<int>(r.old_id.size());
            r.old_id.push_back(v);
        }
    if (r.old_id.empty())
        throw std::invalid_argument(std::string(what) + ": nothing left");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < t.n; ++v) {
        if (!keep[v]) continue;
        for (int w : t.adj[v])
            if (v < w && keep[w]) edges.emplace_back(r.new_id[v], r.new_id[w]);
    }
    int m = static_cast<int>(r.old_id.size());
    if (static_cast<int>(edges.size()) != m - 1)
        throw std::invalid_argument(std::string(what) + ": remainder is disconnected");
    r.tree = make_tree(m, edges);  // also rechecks connectivity
    if (!t.labels.empty()) {
        r.tree.labels.reserve(m);
        for (int v : r.old_id) r.tree.labels.push_back(t.labels[v]);
    }
    return r;
}

// v together with all its descendants in the rooted view.
inline Reindexed maximal_subtree(const Tree& t, const RootedView& rv, int v) {
    check_vertex(t, v, "maximal_subtree");
    std::vector<char> keep(t.n, 0);
    keep[v] = 1;
    for (int w : rv.order)  // BFS order: parents first
        if (w != v && rv.parent[w] >= 0 && keep[rv.parent[w]]) keep[w] = 1;
    return induced_subtree(t, keep, "maximal_subtree");
}

inline Reindexed remove_vertices(const Tree& t, const std::vector<int>& victims) {
    std::vector<char> keep(t.n, 1);
    for (int v : victims) {
        check_vertex(t, v, "remove_vertices");
        keep[v] = 0;
    }
    return induced_subtree(t, keep, "remove_vertices");
}

// Endpoint-to-endpoint path realizing the diameter. Deterministic: both BFS
// sweeps take the smallest-id farthest vertex, and the path starts at the
// smaller endpoint.
struct DiametralPath {
    std::vector<int> vertices;  // v_1 .. v_{d+1}
    int diameter = 0;
};

inline DiametralPath diametral_path(const Tree& t) {
    if (t.n < 2)
        throw std::invalid_argument("diametral_path: need at least two vertices");
    auto farthest = [&](int src) {
        auto dist = bfs_distances(t, src);
        int best = src;
        for (int v = 0; v < t.n; ++v)
            if (dist[v] > dist[best]) best = v;  // ties keep the smaller id
        return best;
    };
    int u = farthest(0);
    int v = farthest(u);
    if (u > v) std::swap(u, v);
    auto rv = root_at(t, v);
    DiametralPath p;
    for (int w = u; w != -1; w = rv.parent[w]) p.vertices.push_back(w);
    p.diameter = static_cast<int>(p.vertices.size()) - 1;
    return p;
}

}  // namespace toid
