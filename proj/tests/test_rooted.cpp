#include <doctest.h>

#include "toid/rooted.hpp"

using namespace toid;

TEST_CASE("rooting a tree") {
    Tree t = make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto rv = root_at(t, 1);
    CHECK(rv.parent[1] == -1);
    CHECK(rv.parent[0] == 1);
    CHECK(rv.parent[4] == 3);
    CHECK(rv.depth[6] == 3);
    CHECK(rv.order.size() == 7);
    CHECK(rv.order.front() == 1);
}

TEST_CASE("maximal subtree keeps descendants only") {
    Tree t = make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto rv = root_at(t, 1);
    auto sub = maximal_subtree(t, rv, 3);
    CHECK(sub.tree.n == 4);
    CHECK(sub.old_id == std::vector<int>{3, 4, 5, 6});
    CHECK(sub.new_id[3] == 0);
    CHECK(sub.new_id[0] == -1);
    CHECK(sub.tree.has_edge(0, 1));  // 3-4
    CHECK(sub.tree.has_edge(1, 2));  // 4-5
}

TEST_CASE("removing vertices relabels densely") {
    Tree p5 = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto r = remove_vertices(p5, {0, 1});
    CHECK(r.tree.n == 3);
    CHECK(r.old_id == std::vector<int>{2, 3, 4});
    CHECK(r.new_id == std::vector<int>{-1, -1, 0, 1, 2});
    // removing a cut vertex leaves a disconnected remainder
    CHECK_THROWS_AS(remove_vertices(p5, {2}), std::invalid_argument);
    CHECK_THROWS_AS(remove_vertices(p5, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("diametral path is deterministic") {
    // star: diameter 2, and the tie-breaks pick the smallest leaves
    Tree star = make_tree(4, {{0, 1}, {0, 2}, {0, 3}});
    auto dp = diametral_path(star);
    CHECK(dp.diameter == 2);
    CHECK(dp.vertices == std::vector<int>{1, 0, 2});

    Tree t = make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto dt = diametral_path(t);
    CHECK(dt.diameter == 4);
    CHECK(dt.vertices == std::vector<int>{0, 1, 3, 4, 5});

    Tree p2 = make_tree(2, {{0, 1}});
    auto d2 = diametral_path(p2);
    CHECK(d2.diameter == 1);
    CHECK(d2.vertices == std::vector<int>{0, 1});
}
