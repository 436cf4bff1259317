#pragma once

#include "toid/rng.hpp"
#include "toid/tree.hpp"

namespace toid {

// Tree on seq.size() + 2 vertices from a Pruefer sequence. Linear-time
// two-pointer decode. The empty sequence gives the single edge.
inline Tree from_prufer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("from_prufer: entry out of range");
        ++deg[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;  // v became the smallest unused leaf
        } else {
            while (deg[++ptr] != 1) {
            }
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);  // the last two leaves are leaf and n-1
    return make_tree(n, edges);
}

// Uniform over labeled trees (uniform Pruefer sequence), n >= 2.
inline Tree random_tree(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_tree: n must be at least 2");
    if (n == 2) return make_tree(2, {{0, 1}});
    std::vector<int> seq(n - 2);
    for (auto& v : seq) v = rng.range(0, n - 1);
    return from_prufer(seq);
}

}  // namespace toid
