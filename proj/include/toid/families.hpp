#pragma once

#include <optional>

#include <json.hpp>

#include "toid/canonical.hpp"
#include "toid/classify.hpp"
#include "toid/rng.hpp"
#include "toid/rooted.hpp"
#include "toid/solver.hpp"

namespace toid {

// Two constructive tree families over the subdivision bounds:
//   lower  trees with 3*gamma_toi(S(T)) == 4n - l - s
//   upper  trees with 3*gamma_toi(S(T)) == 4n - l + s - 2
// Both are generated from the single edge P_2 by local attachments, one
// step kind per legal site class.
enum class Family { lower, upper };

// F1/O1 attach a single leaf to a support. F2 attaches a 2-path to a
// support or semi-support. F3/O2 attach a 3-path (F3 onto a weak leaf,
// O2 onto a support or weak leaf). O3 glues the center of a spider of r
// 3-paths onto a weak leaf.
//
// F3 additionally requires a host with at least three vertices: attaching
// onto either endpoint of the bare edge yields the 5-vertex path, which
// misses the lower bound (its numerator 16 is not divisible by 3), so the
// edge tree has no legal F3 site.
enum class OpKind { F1, F2, F3, O1, O2, O3 };

inline Family family_of(OpKind k) {
    return (k == OpKind::F1 || k == OpKind::F2 || k == OpKind::F3) ? Family::lower
                                                                   : Family::upper;
}

inline const char* op_name(OpKind k) {
    switch (k) {
        case OpKind::F1: return "F1";
        case OpKind::F2: return "F2";
        case OpKind::F3: return "F3";
        case OpKind::O1: return "O1";
        case OpKind::O2: return "O2";
        default: return "O3";
    }
}

inline OpKind op_from_name(std::string_view s) {
    for (OpKind k : {OpKind::F1, OpKind::F2, OpKind::F3, OpKind::O1, OpKind::O2,
                     OpKind::O3})
        if (s == op_name(k)) return k;
    throw std::invalid_argument("unknown operation '" + std::string(s) + "'");
}

// site is a vertex id in the tree the step is applied to; r (>= 2) is the
// spider width, O3 only.
struct OperationStep {
    OpKind kind;
    int site = 0;
    int r = 0;

    bool operator==(const OperationStep&) const = default;
};

// A construction recipe: start from P_2 (with the designated support) and
// apply the steps in order.
struct OperationScript {
    int p2_support = 0;
    std::vector<OperationStep> steps;

    bool operator==(const OperationScript&) const = default;
};

struct ReductionTrace {
    bool accepted = false;
    OperationScript script;  // meaningful only when accepted
};

inline std::vector<int> legal_sites(const Tree& t, const VertexClasses& c, OpKind k) {
    auto merged = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    switch (k) {
        case OpKind::F1:
        case OpKind::O1: return c.supports;
        case OpKind::F2: return merged(c.supports, c.semi_supports);
        case OpKind::F3: return t.n >= 3 ? c.weak_leaves : std::vector<int>{};
        case OpKind::O2: return merged(c.supports, c.weak_leaves);
        default: return c.weak_leaves;  // O3
    }
}

// New vertices take ids n, n+1, ...: for a path attachment the vertex
// adjacent to the site comes first; for O3 the branches are laid out in
// order, each as (next to site, middle, leaf).
inline Tree apply_step(const Tree& t, const OperationStep& step,
                       std::optional<int> p2_support = std::nullopt) {
    auto cls = classify(t, t.n == 2 ? p2_support : std::nullopt);
    auto sites = legal_sites(t, cls, step.kind);
    if (!id_in(sites, step.site))
        throw std::invalid_argument(std::string("apply_step: vertex ") +
                                    std::to_string(step.site) +
                                    " is not a legal site for " + op_name(step.kind));
    auto edges = edge_list(t);
    int next = t.n;
    switch (step.kind) {
        case OpKind::F1:
        case OpKind::O1:
            edges.emplace_back(step.site, next++);
            break;
        case OpKind::F2:
            edges.emplace_back(step.site, next);
            edges.emplace_back(next, next + 1);
            next += 2;
            break;
        case OpKind::F3:
        case OpKind::O2:
            edges.emplace_back(step.site, next);
            edges.emplace_back(next, next + 1);
            edges.emplace_back(next + 1, next + 2);
            next += 3;
            break;
        case OpKind::O3:
            if (step.r < 2)
                throw std::invalid_argument("apply_step: O3 needs r >= 2");
            for (int i = 0; i < step.r; ++i) {
                edges.emplace_back(step.site, next);
                edges.emplace_back(next, next + 1);
                edges.emplace_back(next + 1, next + 2);
                next += 3;
            }
            break;
    }
    return make_tree(next, edges);
}

inline Tree replay(const OperationScript& script) {
    Tree t = make_tree(2, {{0, 1}});
    for (const auto& step : script.steps)
        t = apply_step(t, step, script.p2_support);
    return t;
}

// Spider of r paths of length 3 around a center: center 0, branch i uses
// vertices 3i+1, 3i+2, 3i+3 outward. The center is the only vertex at
// distance two from every support.
inline Tree build_q(int r) {
    if (r < 2) throw std::invalid_argument("build_q: r must be at least 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) {
        int base = 3 * i + 1;
        edges.emplace_back(0, base);
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base + 1, base + 2);
    }
    return make_tree(3 * r + 1, edges);
}

// Membership by value: the authoritative test, integer-exact.
inline bool recognize_arith(const Tree& t, Family fam) {
    auto br = bounds(t);
    return fam == Family::lower ? br.attains_lower : br.attains_upper;
}

// --- structural recognition -------------------------------------------------

namespace detail {

struct ReductionStep {
    OpKind kind;
    int site;                  // id in the reduced tree
    int r;                     // O3 only
    int n_before;              // vertex count before this removal
    std::vector<int> removed;  // pre-removal ids, in apply_step's id order
};

struct BaseCase {
    bool member = false;
    std::vector<OperationStep> script;  // canonical build from P_2
    std::vector<int> psi;               // base-tree id -> replay-tree id
};

// The reduction loops stop at n <= 4; these four shapes are decided by
// table. Lower contains every tree up to 4 vertices; upper misses P_4.
inline BaseCase base_case(const Tree& t, Family fam) {
    BaseCase b;
    OpKind leafop = fam == Family::lower ? OpKind::F1 : OpKind::O1;
    if (t.n == 2) {
        b.member = true;
        b.psi = {0, 1};
        return b;
    }
    if (t.n == 3) {
        int center = t.degree(0) == 2 ? 0 : (t.degree(1) == 2 ? 1 : 2);
        b.member = true;
        b.script = {{leafop, 0, 0}};
        b.psi.assign(3, -1);
        b.psi[center] = 0;
        int next = 1;
        for (int v = 0; v < 3; ++v)
            if (v != center) b.psi[v] = next++;
        return b;
    }
    // n == 4: star or path
    int center = -1;
    for (int v = 0; v < 4; ++v)
        if (t.degree(v) == 3) center = v;
    if (center >= 0) {
        b.member = true;
        b.script = {{leafop, 0, 0}, {leafop, 0, 0}};
        b.psi.assign(4, -1);
        b.psi[center] = 0;
        int next = 1;
        for (int v = 0; v < 4; ++v)
            if (v != center) b.psi[v] = next++;
        return b;
    }
    if (fam == Family::upper) return b;  // P_4 misses the upper bound
    int e1 = -1, e2 = -1;
    for (int v = 0; v < 4; ++v)
        if (t.is_leaf(v)) (e1 < 0 ? e1 : e2) = v;
    int m1 = t.adj[e1][0];
    int m2 = t.adj[e2][0];
    b.member = true;
    b.script = {{OpKind::F2, 0, 0}};
    // replay of [F2 at 0] is the path 1-0-2-3
    b.psi.assign(4, -1);
    b.psi[m1] = 0;
    b.psi[e1] = 1;
    b.psi[m2] = 2;
    b.psi[e2] = 3;
    return b;
}

// One peel of the lower reduction; returns false to reject.
inline bool reduce_lower_once(Tree& t, std::vector<ReductionStep>& rsteps) {
    auto dp = diametral_path(t);
    const auto& p = dp.vertices;
    if (t.degree(p[1]) >= 3) {
        auto nxt = remove_vertices(t, {p[0]});
        rsteps.push_back({OpKind::F1, nxt.new_id[p[1]], 0, t.n, {p[0]}});
        t = std::move(nxt.tree);
        return true;
    }
    if (t.degree(p[2]) >= 3) {
        auto nxt = remove_vertices(t, {p[0], p[1]});
        rsteps.push_back({OpKind::F2, nxt.new_id[p[2]], 0, t.n, {p[1], p[0]}});
        t = std::move(nxt.tree);
        return true;
    }
    // v2 and v3 both have degree 2, so the path extends at least to v4.
    if (p.size() < 4) return false;
    auto nxt = remove_vertices(t, {p[0], p[1], p[2]});
    if (nxt.tree.n == 2) return false;  // F3 onto the bare edge is not legal
    auto ncls = classify(nxt.tree);
    int v4 = nxt.new_id[p[3]];
    if (!id_in(ncls.weak_leaves, v4)) return false;
    rsteps.push_back({OpKind::F3, v4, 0, t.n, {p[2], p[1], p[0]}});
    t = std::move(nxt.tree);
    return true;
}

// One peel of the upper reduction.
inline bool reduce_upper_once(Tree& t, std::vector<ReductionStep>& rsteps) {
    auto cls = classify(t);
    if (!cls.strong_leaves.empty()) {
        int leaf = cls.strong_leaves[0];
        int sup = t.adj[leaf][0];
        auto nxt = remove_vertices(t, {leaf});
        rsteps.push_back({OpKind::O1, nxt.new_id[sup], 0, t.n, {leaf}});
        t = std::move(nxt.tree);
        return true;
    }
    // No strong leaves on >= 5 vertices forces diameter >= 4 and deg(v2) = 2.
    auto dp = diametral_path(t);
    const auto& p = dp.vertices;
    if (p.size() < 5) return false;
    if (t.degree(p[2]) != 2) return false;
    auto nxt = remove_vertices(t, {p[0], p[1], p[2]});
    auto ncls = classify(nxt.tree);
    int v4 = nxt.new_id[p[3]];
    if (id_in(ncls.supports, v4) || id_in(ncls.weak_leaves, v4)) {
        rsteps.push_back({OpKind::O2, v4, 0, t.n, {p[2], p[1], p[0]}});
        t = std::move(nxt.tree);
        return true;
    }
    if (!id_in(ncls.near_semi_supports, v4)) return false;

    // v4 sits next to a semi-support once its first branch is peeled, so the
    // whole hanging subtree must be a spider of 3-paths glued at v4.
    int v5 = p[4];
    int r = t.degree(p[3]) - 1;
    if (r < 2) return false;
    std::vector<int> removed;
    removed.reserve(3 * r);
    for (int c1 : t.adj[p[3]]) {
        if (c1 == v5) continue;
        if (t.degree(c1) != 2) return false;
        int c2 = t.adj[c1][0] == p[3] ? t.adj[c1][1] : t.adj[c1][0];
        if (t.degree(c2) != 2) return false;
        int c3 = t.adj[c2][0] == c1 ? t.adj[c2][1] : t.adj[c2][0];
        if (t.degree(c3) != 1) return false;
        removed.push_back(c1);
        removed.push_back(c2);
        removed.push_back(c3);
    }
    auto cut = remove_vertices(t, removed);
    auto ccls = classify(cut.tree);  // at least 3 vertices: v4, v5, and beyond
    int site = cut.new_id[p[3]];
    if (!id_in(ccls.weak_leaves, site)) return false;
    rsteps.push_back({OpKind::O3, site, r, t.n, std::move(removed)});
    t = std::move(cut.tree);
    return true;
}

}  // namespace detail

// Structural membership test. Peels the tree down to a base case along a
// diametral path, recording the inverse attachment of every peel, then
// rewrites the recorded sites into the id space of a replay from P_2. No
// gamma computation is involved; on acceptance the script replays to a
// tree isomorphic to the input.
inline ReductionTrace recognize_structural(const Tree& input, Family fam) {
    Tree t = input;
    t.labels.clear();
    std::vector<detail::ReductionStep> rsteps;
    while (t.n > 4) {
        bool ok = fam == Family::lower ? detail::reduce_lower_once(t, rsteps)
                                       : detail::reduce_upper_once(t, rsteps);
        if (!ok) return {};
    }
    auto base = detail::base_case(t, fam);
    if (!base.member) return {};

    ReductionTrace out;
    out.accepted = true;
    out.script.p2_support = 0;
    out.script.steps = base.script;
    std::vector<int> psi = base.psi;  // current reduced id -> replay id
    int n_replay = t.n;
    for (auto it = rsteps.rbegin(); it != rsteps.rend(); ++it) {
        const auto& st = *it;
        out.script.steps.push_back({st.kind, psi[st.site], st.r});
        std::vector<char> gone(st.n_before, 0);
        for (int v : st.removed) gone[v] = 1;
        std::vector<int> next_psi(st.n_before, -1);
        int dense = 0;
        for (int v = 0; v < st.n_before; ++v)
            if (!gone[v]) next_psi[v] = psi[dense++];
        for (int v : st.removed) next_psi[v] = n_replay++;
        psi = std::move(next_psi);
    }
    return out;
}

// For a tree that attains the upper bound, has no strong leaves, and is
// not the 5-vertex path: every semi-support should see exactly one
// support. Violated preconditions raise; the return value reports the
// property itself.
inline bool semi_support_uniqueness(const Tree& t) {
    auto cls = classify(t);
    if (!recognize_arith(t, Family::upper))
        throw std::invalid_argument(
            "semi_support_uniqueness: tree does not attain the upper bound");
    if (!cls.strong_leaves.empty())
        throw std::invalid_argument("semi_support_uniqueness: tree has strong leaves");
    if (t.n == 5 && is_path_graph(t))
        throw std::invalid_argument(
            "semi_support_uniqueness: the 5-vertex path is excluded");
    for (int v : cls.semi_supports) {
        int sup_nbrs = 0;
        for (int w : t.adj[v]) sup_nbrs += id_in(cls.supports, w);
        if (sup_nbrs != 1) return false;
    }
    return true;
}

// Uniform-ish random member: at every stage one of the family's operations
// with a nonempty site class is drawn, then a site (and r for O3).
inline OperationScript random_script(Family fam, int steps, std::uint64_t seed,
                                     int max_r = 4) {
    Rng rng(seed);
    OperationScript script;
    Tree t = make_tree(2, {{0, 1}});
    std::vector<OpKind> pool =
        fam == Family::lower
            ? std::vector<OpKind>{OpKind::F1, OpKind::F2, OpKind::F3}
            : std::vector<OpKind>{OpKind::O1, OpKind::O2, OpKind::O3};
    for (int i = 0; i < steps; ++i) {
        auto cls = classify(t, t.n == 2 ? std::optional<int>(script.p2_support)
                                        : std::nullopt);
        std::vector<std::pair<OpKind, std::vector<int>>> options;
        for (OpKind k : pool) {
            auto sites = legal_sites(t, cls, k);
            if (!sites.empty()) options.emplace_back(k, std::move(sites));
        }
        const auto& [kind, sites] = options[rng.below(options.size())];
        OperationStep step{kind, sites[rng.below(sites.size())], 0};
        if (kind == OpKind::O3) step.r = rng.range(2, max_r);
        t = apply_step(t, step, script.p2_support);
        script.steps.push_back(step);
    }
    return script;
}

// --- script serialization ----------------------------------------------------

inline nlohmann::ordered_json script_to_json(const OperationScript& script) {
    nlohmann::ordered_json j;
    j["base"] = {{"n", 2}, {"support", script.p2_support}};
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& st : script.steps) {
        nlohmann::ordered_json s;
        s["kind"] = op_name(st.kind);
        s["site"] = st.site;
        if (st.kind == OpKind::O3) s["r"] = st.r;
        j["steps"].push_back(std::move(s));
    }
    return j;
}

inline OperationScript script_from_json(const nlohmann::json& j) {
    OperationScript script;
    if (!j.is_object() || !j.contains("base") || !j.contains("steps"))
        throw std::invalid_argument("script: expected an object with base and steps");
    script.p2_support = j.at("base").value("support", 0);
    if (script.p2_support != 0 && script.p2_support != 1)
        throw std::invalid_argument("script: base support must be 0 or 1");
    for (const auto& s : j.at("steps")) {
        OperationStep st{op_from_name(s.at("kind").get<std::string>()),
                         s.at("site").get<int>(), s.value("r", 0)};
        script.steps.push_back(st);
    }
    return script;
}

inline std::string script_to_string(const OperationScript& script) {
    return script_to_json(script).dump();
}

inline OperationScript script_from_string(std::string_view text) {
    try {
        return script_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("script: ") + e.what());
    }
}

}  // namespace toid
