#include <doctest.h>

#include "toid/canonical.hpp"
#include "toid/graph6.hpp"
#include "toid/prufer.hpp"
#include "toid/rng.hpp"

using namespace toid;

namespace {
Tree path_n(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_tree(n, e);
}
}  // namespace

// Reference strings produced independently with networkx.
TEST_CASE("known encodings") {
    CHECK(to_graph6(make_tree(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(path_n(3)) == "Bg");
    CHECK(to_graph6(path_n(4)) == "Ch");
    CHECK(to_graph6(path_n(5)) == "DhC");
    CHECK(to_graph6(path_n(7)) == "FhCGG");
    CHECK(to_graph6(path_n(8)) == "GhCGGC");
    CHECK(to_graph6(path_n(10)) == "IhCGGC@?G");
    CHECK(to_graph6(make_tree(4, {{0, 1}, {0, 2}, {0, 3}})) == "Cs");
    CHECK(to_graph6(make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == "Ds_");
    CHECK(to_graph6(make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}})) ==
          "FiCGO");
    CHECK(to_graph6(make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}})) == "DhO");
    // 63 vertices crosses into the multi-byte vertex-count form
    CHECK(to_graph6(path_n(63)).substr(0, 4) == "~??~");
}

TEST_CASE("decode and header handling") {
    Graph p4 = from_graph6("Ch");
    CHECK(p4.n == 4);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 2));
    CHECK(p4.has_edge(2, 3));
    CHECK(p4.edge_count() == 3);

    Graph with_header = from_graph6(">>graph6<<Cs");
    CHECK(with_header.n == 4);
    CHECK(with_header.degree(0) == 3);

    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Ch "), std::invalid_argument);   // trailing byte
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(from_graph6("C\x01"), std::invalid_argument); // byte below '?'
    CHECK_THROWS_AS(tree_from_graph6("C~"), std::invalid_argument);  // has a cycle
}

TEST_CASE("round trip across the size forms") {
    Rng rng(7);
    for (int n : {2, 5, 61, 62, 63, 64, 200}) {
        Tree t = random_tree(n, rng);
        Tree back = tree_from_graph6(to_graph6(t));
        CHECK(back.n == t.n);
        CHECK(edge_list(back) == edge_list(t));  // ids survive exactly
    }
    // long-form reference values
    std::string p63 = to_graph6(path_n(63));
    CHECK(p63.substr(0, 9) == "~??~hCGGC");
    CHECK(p63.size() == 4 + (63 * 62 / 2 + 5) / 6);
    std::string p100 = to_graph6(path_n(100));
    CHECK(p100.substr(0, 5) == "~?@ch");
    CHECK(tree_from_graph6(p100).n == 100);
}
