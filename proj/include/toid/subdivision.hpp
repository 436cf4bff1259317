#pragma once

#include "toid/tree.hpp"

namespace toid {

// Subdivision S(T): every edge uv is replaced by a path u-x-v through a
// fresh vertex x. Original vertices keep their ids; the edge vertices are
// n, n+1, ... in sorted edge order, so the mapping is reproducible.
struct Subdivision {
    Tree graph;
    std::vector<std::pair<std::pair<int, int>, int>> edge_vertices;  // ((u,v),x), u<v

    int edge_vertex(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (const auto& [e, x] : edge_vertices)
            if (e.first == u && e.second == v) return x;
        throw std::invalid_argument("edge_vertex: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    }
};

inline Subdivision subdivide(const Tree& t) {
    if (t.n < 2)
        throw std::invalid_argument("subdivide: need at least two vertices");
    auto edges = edge_list(t);  // sorted pairs, lexicographic
    Subdivision s;
    std::vector<std::pair<int, int>> out;
    out.reserve(2 * edges.size());
    int next_id = t.n;
    for (auto [u, v] : edges) {
        out.emplace_back(u, next_id);
        out.emplace_back(next_id, v);
        s.edge_vertices.push_back({{u, v}, next_id});
        ++next_id;
    }
    s.graph = make_tree(2 * t.n - 1, out);
    return s;
}

}  // namespace toid
