#pragma once

#include <cstdint>
#include <limits>

#include "toid/classify.hpp"
#include "toid/subdivision.hpp"
#include "toid/tree.hpp"

namespace toid {

// D is a total outer-independent dominating set (TOIDS) when every vertex
// has a neighbor in D and V \ D is independent. Equivalently: every vertex
// outside D has all neighbors in D, and every vertex of D has a D-neighbor.
inline bool is_toids(const Graph& g, const std::vector<int>& d) {
    std::vector<char> in(g.n, 0);
    for (int v : d) {
        check_vertex(g, v, "is_toids");
        if (in[v])
            throw std::invalid_argument("is_toids: duplicate id " + std::to_string(v));
        in[v] = 1;
    }
    for (int v = 0; v < g.n; ++v) {
        bool dominated = false;
        for (int w : g.adj[v]) {
            if (in[w]) dominated = true;
            if (!in[v] && !in[w]) return false;  // two adjacent outsiders
        }
        if (!dominated) return false;
    }
    return true;
}

enum class Method { brute_force, tree_dp };

struct ToidSolution {
    int value = 0;
    std::vector<int> witness;  // sorted; always passes is_toids
    Method method = Method::brute_force;
    std::vector<int> forced;   // the inclusion constraint it was solved under
};

namespace detail {

inline std::vector<int> checked_forced(const Graph& g, std::vector<int> forced,
                                       const char* what) {
    std::sort(forced.begin(), forced.end());
    for (std::size_t i = 0; i < forced.size(); ++i) {
        check_vertex(g, forced[i], what);
        if (i > 0 && forced[i] == forced[i - 1])
            throw std::invalid_argument(std::string(what) + ": duplicate forced id " +
                                        std::to_string(forced[i]));
    }
    return forced;
}

}  // namespace detail

// Exact minimum by subset enumeration; the independent oracle the rest of
// the library is checked against. Candidates containing `forced` are tried
// by increasing size, and for each size in lexicographic order of the free
// part, so the witness is the lexicographically least minimum TOIDS
// containing `forced`. Deliberately no shortcuts beyond bit tricks.
inline ToidSolution gamma_brute(const Graph& g, std::vector<int> forced = {},
                                int max_n = 24) {
    if (g.n < 2 || !is_connected(g))
        throw std::invalid_argument("gamma_brute: need a connected graph on >= 2 vertices");
    if (max_n > 30) throw std::invalid_argument("gamma_brute: cap above 30 refused");
    if (g.n > max_n)
        throw std::invalid_argument("gamma_brute: " + std::to_string(g.n) +
                                    " vertices exceeds the cap of " + std::to_string(max_n));
    forced = detail::checked_forced(g, std::move(forced), "gamma_brute");

    std::vector<std::uint32_t> nbr(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) nbr[v] |= std::uint32_t{1} << w;
    const std::uint32_t full = (g.n == 32) ? ~std::uint32_t{0}
                                           : (std::uint32_t{1} << g.n) - 1;
    std::uint32_t forced_mask = 0;
    for (int v : forced) forced_mask |= std::uint32_t{1} << v;

    auto valid = [&](std::uint32_t d) {
        std::uint32_t out = full & ~d;
        for (int v = 0; v < g.n; ++v) {
            if ((nbr[v] & d) == 0) return false;
            if ((out >> v & 1) && (nbr[v] & out)) return false;
        }
        return true;
    };

    std::vector<int> free_ids;
    for (int v = 0; v < g.n; ++v)
        if (!(forced_mask >> v & 1)) free_ids.push_back(v);
    const int nfree = static_cast<int>(free_ids.size());

    for (int k = 0; k <= nfree; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint32_t d = forced_mask;
            for (int i : idx) d |= std::uint32_t{1} << free_ids[i];
            if (valid(d)) {
                ToidSolution sol;
                sol.value = static_cast<int>(forced.size()) + k;
                for (int v = 0; v < g.n; ++v)
                    if (d >> v & 1) sol.witness.push_back(v);
                sol.method = Method::brute_force;
                sol.forced = std::move(forced);
                return sol;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == nfree - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // D = V is always a TOIDS of a connected graph on >= 2 vertices.
    throw std::logic_error("gamma_brute: search space exhausted unexpectedly");
}

namespace detail {

// Tree DP states per vertex, children folded in bottom-up:
//   A  in D, already has a D-neighbor among its children
//   B  in D, no D-child yet (the parent must be in D)
//   C  outside D: every child is in D and self-satisfied (state A);
//      the parent, if any, must be in D for independence
// Root feasibility: A or C. Forced vertices just lose state C.
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

}  // namespace detail

// Exact minimum for trees in linear time, with an optional forced-inclusion
// set. Witness rebuilt from per-child backpointers and checked before
// returning. Iterative throughout; comfortable at n = 100000.
inline ToidSolution gamma_tree_dp(const Tree& t, std::vector<int> forced = {}) {
    using detail::kInf;
    if (t.n < 2)
        throw std::invalid_argument("gamma_tree_dp: need at least two vertices");
    forced = detail::checked_forced(t, std::move(forced), "gamma_tree_dp");
    std::vector<char> is_forced(t.n, 0);
    for (int v : forced) is_forced[v] = 1;

    std::vector<int> parent(t.n, -1), order;
    order.reserve(t.n);
    {
        std::vector<char> seen(t.n, 0);
        seen[0] = 1;
        order.push_back(0);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : t.adj[order[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[i];
                    order.push_back(w);
                }
    }

    std::vector<long long> a(t.n), b(t.n), c(t.n);
    std::vector<signed char> pick_a(t.n, -1);  // child's state inside the parent's A plan
    std::vector<int> upgrade(t.n, -1);         // child promoted to an in-state, or -1

    auto add = [](long long x, long long y) {
        return std::min(kInf, x + y);
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        long long sum_min3 = 1;   // v itself when in D
        long long sum_c = 1;      // all children out
        long long sum_a = 0;      // v out: children all A
        long long best_upgrade = kInf;
        int upgrade_child = -1;
        bool has_in_pick = false;
        for (int w : t.adj[v]) {
            if (w == parent[v]) continue;
            long long in_w = std::min(a[w], b[w]);
            long long m3 = std::min(in_w, c[w]);
            if (in_w <= c[w]) {
                has_in_pick = true;
                pick_a[w] = (a[w] <= b[w]) ? 0 : 1;
            } else {
                pick_a[w] = 2;
                long long delta = in_w - c[w];
                if (delta < best_upgrade) {
                    best_upgrade = delta;
                    upgrade_child = w;
                }
            }
            sum_min3 = add(sum_min3, m3);
            sum_c = add(sum_c, c[w]);
            sum_a = add(sum_a, a[w]);
        }
        if (v == order[0] ? t.adj[v].empty() : t.adj[v].size() == 1) {
            a[v] = kInf;  // a leaf in D has no child to satisfy it
            b[v] = 1;
            c[v] = is_forced[v] ? kInf : 0;
            upgrade[v] = -1;
            continue;
        }
        if (has_in_pick) {
            a[v] = sum_min3;
            upgrade[v] = -1;
        } else {
            a[v] = (upgrade_child >= 0) ? add(sum_min3, best_upgrade) : kInf;
            upgrade[v] = upgrade_child;
        }
        b[v] = sum_c;
        c[v] = is_forced[v] ? kInf : sum_a;
    }

    int root = order[0];
    long long best = std::min(a[root], c[root]);
    if (best >= kInf)
        throw std::logic_error("gamma_tree_dp: no feasible set, which cannot happen");

    // Top-down replay of the decisions.
    std::vector<signed char> state(t.n, -1);
    state[root] = (a[root] <= c[root]) ? 0 : 2;
    std::vector<int> witness;
    for (int v : order) {
        if (state[v] != 2) witness.push_back(v);
        for (int w : t.adj[v]) {
            if (w == parent[v]) continue;
            switch (state[v]) {
                case 0:  // A: recorded pick, possibly promoted
                    if (upgrade[v] == w)
                        state[w] = (a[w] <= b[w]) ? 0 : 1;
                    else
                        state[w] = pick_a[w];
                    break;
                case 1:  // B: every child out
                    state[w] = 2;
                    break;
                default:  // C: every child in and self-satisfied
                    state[w] = 0;
                    break;
            }
        }
    }
    std::sort(witness.begin(), witness.end());

    ToidSolution sol;
    sol.value = static_cast<int>(best);
    sol.witness = std::move(witness);
    sol.method = Method::tree_dp;
    sol.forced = std::move(forced);
    if (static_cast<int>(sol.witness.size()) != sol.value || !is_toids(t, sol.witness))
        throw std::logic_error("gamma_tree_dp: reconstructed witness failed validation");
    for (int v : sol.forced)
        if (!std::binary_search(sol.witness.begin(), sol.witness.end(), v))
            throw std::logic_error("gamma_tree_dp: witness dropped a forced vertex");
    return sol;
}

// The sandwich report for a tree and its subdivision: with n vertices,
// l leaves and s supports,
//   (4n - l - s) / 3  <=  gamma_toi(S(T))  <=  (4n - l + s - 2) / 3.
// Attainment is integer-exact (3*gamma against the numerators).
struct BoundReport {
    int n = 0, l = 0, s = 0;
    long long lower_numerator = 0;
    long long upper_numerator = 0;
    int gamma_subdivided = 0;
    bool attains_lower = false;
    bool attains_upper = false;
};

inline BoundReport bounds(const Tree& t) {
    auto cls = classify(t);
    BoundReport r;
    r.n = t.n;
    r.l = cls.leaf_count();
    r.s = cls.support_count();
    r.lower_numerator = 4LL * r.n - r.l - r.s;
    r.upper_numerator = 4LL * r.n - r.l + r.s - 2;
    r.gamma_subdivided = gamma_tree_dp(subdivide(t).graph).value;
    r.attains_lower = (3LL * r.gamma_subdivided == r.lower_numerator);
    r.attains_upper = (3LL * r.gamma_subdivided == r.upper_numerator);
    return r;
}

}  // namespace toid
