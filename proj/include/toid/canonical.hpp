#pragma once

#include "toid/rooted.hpp"
#include "toid/tree.hpp"

namespace toid {

// One or two vertices minimizing the largest component left by their removal.
inline std::vector<int> centroids(const Tree& t) {
    if (t.n == 1) return {0};
    auto rv = root_at(t, 0);
    std::vector<int> size(t.n, 1);
    for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it) {
        int v = *it;
        if (rv.parent[v] >= 0) size[rv.parent[v]] += size[v];
    }
    std::vector<int> out;
    int best = t.n;
    for (int v = 0; v < t.n; ++v) {
        int heaviest = t.n - size[v];  // the component through the parent
        for (int w : t.adj[v])
            if (w != rv.parent[v]) heaviest = std::max(heaviest, size[w]);
        if (heaviest < best) {
            best = heaviest;
            out.assign(1, v);
        } else if (heaviest == best) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// AHU parenthesis encoding of the tree rooted at `root`, children codes
// sorted, so equal strings == isomorphic rooted trees. `banned` (if >= 0)
// cuts off that neighbor of the root; used for edge-centered forms.
// Iterative over reverse BFS order to keep deep paths off the call stack.
inline std::string rooted_code(const Tree& t, int root, int banned = -1) {
    std::vector<int> parent(t.n, -2), order;
    order.reserve(t.n);
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : t.adj[v]) {
            if (v == root && w == banned) continue;
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> kids(t.n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end());
        std::string code = "(";
        for (auto& k : ks) code += k;
        code += ')';
        ks.clear();
        ks.shrink_to_fit();
        if (parent[v] >= 0)
            kids[parent[v]].push_back(std::move(code));
        else
            return code;
    }
    return "()";  // unreachable
}

// Canonical form of the unrooted tree: rooted at the centroid, or at the
// centroid edge when there are two. Equal strings == isomorphic trees.
inline std::string canonical_form(const Tree& t) {
    auto c = centroids(t);
    if (c.size() == 1) return "V" + rooted_code(t, c[0]);
    std::string a = rooted_code(t, c[0], c[1]);
    std::string b = rooted_code(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "E" + a + b;
}

inline bool isomorphic(const Tree& a, const Tree& b) {
    if (a.n != b.n) return false;
    return canonical_form(a) == canonical_form(b);
}

inline bool is_path_graph(const Tree& t) {
    if (t.n == 1) return true;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) > 2) return false;
    return true;
}

}  // namespace toid
