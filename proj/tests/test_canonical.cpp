#include <doctest.h>

#include "toid/canonical.hpp"
#include "toid/prufer.hpp"
#include "toid/rng.hpp"

using namespace toid;

TEST_CASE("centroids") {
    CHECK(centroids(make_tree(1, {})) == std::vector<int>{0});
    CHECK(centroids(make_tree(2, {{0, 1}})) == std::vector<int>{0, 1});
    CHECK(centroids(make_tree(4, {{0, 1}, {1, 2}, {2, 3}})) == std::vector<int>{1, 2});
    CHECK(centroids(make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) ==
          std::vector<int>{2});
    CHECK(centroids(make_tree(4, {{0, 1}, {0, 2}, {0, 3}})) == std::vector<int>{0});
}

TEST_CASE("isomorphism via canonical forms") {
    Tree a = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    Tree b = make_tree(5, {{4, 3}, {3, 2}, {2, 1}, {3, 0}});  // same chair, relabeled
    Tree c = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});  // the 5-path
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, c));
    CHECK_FALSE(isomorphic(a, make_tree(4, {{0, 1}, {1, 2}, {2, 3}})));
    // bicentroid case goes through the edge-centered encoding
    Tree p4 = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    Tree p4b = make_tree(4, {{2, 0}, {0, 1}, {1, 3}});
    CHECK(isomorphic(p4, p4b));
}

TEST_CASE("relabeling by a random permutation preserves the form") {
    Rng rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        int n = rng.range(2, 60);
        Tree t = random_tree(n, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : edge_list(t)) edges.emplace_back(perm[u], perm[v]);
        CHECK(isomorphic(t, make_tree(n, edges)));
    }
}

TEST_CASE("path predicate") {
    CHECK(is_path_graph(make_tree(1, {})));
    CHECK(is_path_graph(make_tree(2, {{0, 1}})));
    CHECK(is_path_graph(make_tree(5, {{2, 0}, {0, 3}, {3, 1}, {1, 4}})));
    CHECK_FALSE(is_path_graph(make_tree(4, {{0, 1}, {0, 2}, {0, 3}})));
}
