#include <doctest.h>

#include "toid/subdivision.hpp"

using namespace toid;

TEST_CASE("subdividing an edge") {
    auto s = subdivide(make_tree(2, {{0, 1}}));
    CHECK(s.graph.n == 3);
    CHECK(s.edge_vertex(0, 1) == 2);
    CHECK(s.edge_vertex(1, 0) == 2);
    CHECK(s.graph.has_edge(0, 2));
    CHECK(s.graph.has_edge(2, 1));
    CHECK_FALSE(s.graph.has_edge(0, 1));
    CHECK_THROWS_AS(s.edge_vertex(0, 3), std::invalid_argument);
}

TEST_CASE("subdivision of the worked example") {
    Tree t = make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto s = subdivide(t);
    CHECK(s.graph.n == 13);
    // edge vertices follow the sorted edge order
    CHECK(s.edge_vertex(0, 1) == 7);
    CHECK(s.edge_vertex(1, 2) == 8);
    CHECK(s.edge_vertex(1, 3) == 9);
    CHECK(s.edge_vertex(3, 4) == 10);
    CHECK(s.edge_vertex(4, 5) == 11);
    CHECK(s.edge_vertex(4, 6) == 12);
    // originals keep their ids and are never adjacent to each other
    for (auto [u, v] : edge_list(t)) {
        CHECK_FALSE(s.graph.has_edge(u, v));
        int x = s.edge_vertex(u, v);
        CHECK(s.graph.degree(x) == 2);
        CHECK(s.graph.has_edge(u, x));
        CHECK(s.graph.has_edge(x, v));
    }
    // degrees of originals are preserved
    for (int v = 0; v < t.n; ++v) CHECK(s.graph.degree(v) == t.degree(v));
}

TEST_CASE("subdividing a path doubles it") {
    Tree p4 = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    auto s = subdivide(p4);
    CHECK(s.graph.n == 7);
    int leaves = 0;
    for (int v = 0; v < 7; ++v) leaves += s.graph.is_leaf(v);
    CHECK(leaves == 2);  // still a path

    CHECK_THROWS_AS(subdivide(make_tree(1, {})), std::invalid_argument);
}
