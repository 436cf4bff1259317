// Tour of the library on a 7-vertex tree: exact solves, vertex classes,
// the subdivision bounds, and family recognition with a replayable script.
#include <iostream>

#include "toid/enumerate.hpp"
#include "toid/families.hpp"

using namespace toid;

int main() {
    Tree t = make_tree(7, {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});

    auto sol = gamma_tree_dp(t);
    std::cout << "gamma_toi(T) = " << sol.value << ", witness:";
    for (int v : sol.witness) std::cout << ' ' << v;
    std::cout << '\n';

    auto c = classify(t);
    std::cout << "leaves: " << c.leaf_count() << ", supports: " << c.support_count()
              << ", semi-supports: " << c.semi_supports.size() << '\n';

    auto br = bounds(t);
    std::cout << "gamma_toi(S(T)) = " << br.gamma_subdivided << " with 3*gamma in ["
              << br.lower_numerator << ", " << br.upper_numerator << "]\n";
    std::cout << "attains lower: " << (br.attains_lower ? "yes" : "no")
              << ", attains upper: " << (br.attains_upper ? "yes" : "no") << '\n';

    auto trace = recognize_structural(t, Family::upper);
    if (trace.accepted) {
        std::cout << "upper-family script: " << script_to_string(trace.script) << '\n';
        std::cout << "replay isomorphic: "
                  << (isomorphic(replay(trace.script), t) ? "yes" : "no") << '\n';
    }

    // every 6-vertex tree sits inside the sandwich
    for (const Tree& u : enumerate_free_trees(6)) {
        auto b = bounds(u);
        std::cout << to_graph6(u) << "  3*gamma=" << 3 * b.gamma_subdivided
                  << (b.attains_lower ? "  =lower" : "")
                  << (b.attains_upper ? "  =upper" : "") << '\n';
    }
    return 0;
}
