#include <doctest.h>

#include "toid/tree.hpp"

using namespace toid;

TEST_CASE("make_graph basics") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {3, 1}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 3);
    CHECK(g.is_leaf(0));
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    // adjacency lists come out sorted
    CHECK(g.adj[1] == std::vector<int>{0, 2, 3});
}

TEST_CASE("make_graph rejects bad edges") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(0, {}), std::invalid_argument);
}

TEST_CASE("make_tree accepts trees only") {
    CHECK_NOTHROW(make_tree(1, {}));
    CHECK_NOTHROW(make_tree(4, {{0, 1}, {1, 2}, {2, 3}}));
    // right edge count but disconnected (and a parallel edge rejected earlier)
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("connectivity and distances") {
    Graph path = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(is_connected(path));
    auto d = bfs_distances(path, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
    Graph two = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    CHECK(bfs_distances(two, 0)[2] == -1);
}

TEST_CASE("edge_list is sorted pairs") {
    Tree t = make_tree(4, {{3, 1}, {1, 0}, {2, 1}});
    auto e = edge_list(t);
    CHECK(e == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("edge list text round trip") {
    Tree t = make_tree(4, {{0, 1}, {1, 2}, {1, 3}});
    std::string text = format_edge_list(t);
    Tree back = parse_edge_list(text);
    CHECK(back.n == 4);
    CHECK(edge_list(back) == edge_list(t));

    Tree single = parse_edge_list("# lone vertex\n");
    CHECK(single.n == 1);
    CHECK(single.edge_count() == 0);

    Tree commented = parse_edge_list("0 1\n# middle\n1 2\n");
    CHECK(commented.n == 3);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), std::invalid_argument);
}
