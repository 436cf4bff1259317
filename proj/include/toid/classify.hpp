#pragma once

#include <optional>

#include "toid/tree.hpp"

namespace toid {

// Vertex classes of a tree, each as a sorted id list.
//
//   leaves             degree-1 vertices
//   supports           vertices adjacent to at least one leaf
//   strong_supports    supports adjacent to at least two leaves
//   strong_leaves      leaves whose support is strong
//   weak_leaves        the remaining leaves
//   semi_supports      non-leaf non-support vertices adjacent to a support
//   near_semi_supports vertices outside semi_supports/supports adjacent
//                      to a semi-support
//
// The two-vertex tree is degenerate: both vertices have degree one, so by
// convention one is designated the support and the other the leaf.
struct VertexClasses {
    std::vector<int> leaves;
    std::vector<int> supports;
    std::vector<int> strong_supports;
    std::vector<int> strong_leaves;
    std::vector<int> weak_leaves;
    std::vector<int> semi_supports;
    std::vector<int> near_semi_supports;
    std::optional<int> p2_support;  // set only when n == 2

    int leaf_count() const { return static_cast<int>(leaves.size()); }
    int support_count() const { return static_cast<int>(supports.size()); }
};

inline bool id_in(const std::vector<int>& sorted_ids, int v) {
    return std::binary_search(sorted_ids.begin(), sorted_ids.end(), v);
}

// p2_support picks the designated support of a two-vertex tree (default:
// the lower id). It is ignored, and must stay unset, for larger trees.
inline VertexClasses classify(const Tree& t,
                              std::optional<int> p2_support = std::nullopt) {
    if (t.n < 2)
        throw std::invalid_argument("classify: need at least two vertices");
    VertexClasses c;
    if (t.n == 2) {
        int s = p2_support.value_or(0);
        if (s != 0 && s != 1)
            throw std::invalid_argument("classify: p2_support must be 0 or 1");
        c.supports = {s};
        c.leaves = {1 - s};
        c.weak_leaves = {1 - s};  // the lone support has just one leaf
        c.p2_support = s;
        return c;
    }
    if (p2_support)
        throw std::invalid_argument("classify: p2_support only applies to the two-vertex tree");

    std::vector<char> is_lf(t.n, 0), is_sup(t.n, 0), is_strong(t.n, 0), is_ss(t.n, 0);
    for (int v = 0; v < t.n; ++v)
        if (t.is_leaf(v)) {
            is_lf[v] = 1;
            c.leaves.push_back(v);
        }
    for (int v = 0; v < t.n; ++v) {
        int leaf_nbrs = 0;
        for (int w : t.adj[v]) leaf_nbrs += is_lf[w];
        if (leaf_nbrs >= 1) {
            is_sup[v] = 1;
            c.supports.push_back(v);
        }
        if (leaf_nbrs >= 2) {
            is_strong[v] = 1;
            c.strong_supports.push_back(v);
        }
    }
    for (int v : c.leaves) {
        int sup = t.adj[v][0];
        (is_strong[sup] ? c.strong_leaves : c.weak_leaves).push_back(v);
    }
    for (int v = 0; v < t.n; ++v) {
        if (is_lf[v] || is_sup[v]) continue;
        for (int w : t.adj[v])
            if (is_sup[w]) {
                is_ss[v] = 1;
                c.semi_supports.push_back(v);
                break;
            }
    }
    for (int v = 0; v < t.n; ++v) {
        if (is_ss[v] || is_sup[v]) continue;
        for (int w : t.adj[v])
            if (is_ss[w]) {
                c.near_semi_supports.push_back(v);
                break;
            }
    }
    return c;
}

}  // namespace toid
