#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "toid/families.hpp"
#include "toid/graph6.hpp"
#include "toid/prufer.hpp"

namespace toid {

namespace detail {

// Rooted tree encoded as a level sequence (root level 1, preorder).
inline Tree tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (i > 0) edges.emplace_back(last_at[levels[i] - 1], i);
        last_at[levels[i]] = i;
    }
    return make_tree(n, edges);
}

// Canonical (lexicographically largest) level sequence of t rooted at root.
inline std::vector<int> canonical_levels(const Tree& t, int root) {
    auto rv = root_at(t, root);
    std::vector<std::vector<std::vector<int>>> kids(t.n);
    std::vector<int> result;
    for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it) {
        int v = *it;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end(), std::greater<>());
        std::vector<int> code{1};
        for (auto& k : ks)
            for (int lv : k) code.push_back(lv + 1);
        ks.clear();
        if (rv.parent[v] >= 0)
            kids[rv.parent[v]].push_back(std::move(code));
        else
            result = std::move(code);
    }
    return result;
}

}  // namespace detail

// Streams every free (unlabeled) tree on n vertices exactly once, largest
// canonical level sequence first. Rooted level sequences are enumerated by
// the constant-amortized-time successor rule and filtered down to those
// that are the canonical centroid rooting of their own tree, so vertex ids
// (preorder positions) are reproducible run to run.
inline void enumerate_free_trees(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 1 || n > 18)
        throw std::invalid_argument("enumerate_free_trees: n out of range [1,18]");
    if (n == 1) {
        fn(make_tree(1, {}));
        return;
    }
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    while (true) {
        Tree t = detail::tree_from_levels(levels);
        auto cents = centroids(t);
        auto canon = detail::canonical_levels(t, cents[0]);
        if (cents.size() == 2) canon = std::max(canon, detail::canonical_levels(t, cents[1]));
        if (levels == canon) fn(t);

        int p = -1;
        for (int i = n - 1; i >= 1; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = p - 1;
        while (levels[q] != levels[p] - 1) --q;
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }
}

inline std::vector<Tree> enumerate_free_trees(int n) {
    std::vector<Tree> out;
    enumerate_free_trees(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

enum class MemberFilter { lower, upper, both, neither };

inline std::vector<Tree> find_members(int n, MemberFilter which) {
    if (n < 2) throw std::invalid_argument("find_members: n must be at least 2");
    std::vector<Tree> out;
    enumerate_free_trees(n, [&](const Tree& t) {
        auto br = bounds(t);
        bool take = false;
        switch (which) {
            case MemberFilter::lower: take = br.attains_lower; break;
            case MemberFilter::upper: take = br.attains_upper; break;
            case MemberFilter::both: take = br.attains_lower && br.attains_upper; break;
            case MemberFilter::neither: take = !br.attains_lower && !br.attains_upper; break;
        }
        if (take) out.push_back(t);
    });
    return out;
}

// --- exhaustive sweep ---------------------------------------------------------

enum class Check {
    bounds,             // sandwich inequality on every tree
    char_lower,         // arithmetic vs structural recognition + replay, lower
    char_upper,         // same for the upper family
    forced_supports,    // forcing supports+semi-supports into S(T) costs nothing
    deltas,             // attachment operations shift gamma by their advertised amount
    semi_support_unique,// see below: support uniqueness at semi-supports next to
                        // near-semi-supports, on qualifying upper-bound trees
    oracle_vs_dp        // brute force agrees with the DP on T and S(T)
};

inline const std::vector<std::pair<Check, const char*>>& check_names() {
    static const std::vector<std::pair<Check, const char*>> v = {
        {Check::bounds, "bounds"},
        {Check::char_lower, "char_lower"},
        {Check::char_upper, "char_upper"},
        {Check::forced_supports, "forced_supports"},
        {Check::deltas, "deltas"},
        {Check::semi_support_unique, "semi_support_unique"},
        {Check::oracle_vs_dp, "oracle_vs_dp"},
    };
    return v;
}

inline const char* check_name(Check c) {
    for (auto& [k, s] : check_names())
        if (k == c) return s;
    return "?";
}

inline Check check_from_name(std::string_view s) {
    for (auto& [k, nm] : check_names())
        if (s == nm) return k;
    throw std::invalid_argument("unknown check '" + std::string(s) + "'");
}

struct SweepConfig {
    int max_n = 12;
    std::set<Check> checks = {Check::bounds,          Check::char_lower,
                              Check::char_upper,      Check::forced_supports,
                              Check::deltas,          Check::semi_support_unique,
                              Check::oracle_vs_dp};
    int workers = 1;
    std::uint64_t seed = 0x5eed;
};

struct CheckTally {
    long long checked = 0;
    long long failed = 0;
};

struct Counterexample {
    std::string check;
    int n = 0;
    std::string edges;
    std::string graph6;
    std::string detail;
};

struct PerN {
    int n = 0;
    long long trees = 0;
    long long lower = 0, upper = 0, both = 0;
    double ms = 0;
};

struct SweepReport {
    SweepConfig config;
    std::vector<PerN> per_n;
    std::map<std::string, CheckTally> tallies;
    std::vector<Counterexample> counterexamples;
    double total_ms = 0;

    bool clean() const { return counterexamples.empty(); }
};

namespace detail {

struct TreeResult {
    bool lower = false, upper = false;
    std::map<std::string, std::pair<long long, long long>> tally;  // checked/failed
    std::vector<Counterexample> bad;
};

inline void note(TreeResult& r, const Tree& t, Check c, bool ok,
                 const std::string& detail_msg) {
    auto& [checked, failed] = r.tally[check_name(c)];
    ++checked;
    if (!ok) {
        ++failed;
        r.bad.push_back({check_name(c), t.n, format_edge_list(t), to_graph6(t),
                         detail_msg});
    }
}

inline void check_one_tree(const Tree& t, const SweepConfig& cfg,
                           std::uint64_t tree_seed, TreeResult& r) {
    auto has = [&](Check c) { return cfg.checks.count(c) > 0; };
    auto br = bounds(t);
    r.lower = br.attains_lower;
    r.upper = br.attains_upper;
    long long g3 = 3LL * br.gamma_subdivided;

    if (has(Check::bounds))
        note(r, t, Check::bounds,
             br.lower_numerator <= g3 && g3 <= br.upper_numerator,
             "3*gamma = " + std::to_string(g3) + " outside [" +
                 std::to_string(br.lower_numerator) + "," +
                 std::to_string(br.upper_numerator) + "]");

    for (Family fam : {Family::lower, Family::upper}) {
        Check c = fam == Family::lower ? Check::char_lower : Check::char_upper;
        if (!has(c)) continue;
        bool arith = fam == Family::lower ? br.attains_lower : br.attains_upper;
        auto trace = recognize_structural(t, fam);
        if (trace.accepted != arith) {
            note(r, t, c, false,
                 std::string("structural=") + (trace.accepted ? "yes" : "no") +
                     " arithmetic=" + (arith ? "yes" : "no"));
            continue;
        }
        bool ok = true;
        std::string msg;
        if (trace.accepted) {
            Tree rebuilt = replay(trace.script);
            if (!isomorphic(rebuilt, t)) {
                ok = false;
                msg = "script replay is not isomorphic to the input";
            }
        }
        note(r, t, c, ok, msg);
    }

    if (has(Check::forced_supports) && t.n >= 3) {
        auto cls = classify(t);
        std::vector<int> forced = cls.supports;
        forced.insert(forced.end(), cls.semi_supports.begin(), cls.semi_supports.end());
        std::sort(forced.begin(), forced.end());
        auto sub = subdivide(t);
        int plain, constrained;
        if (2 * t.n - 1 <= 19) {
            plain = gamma_brute(sub.graph).value;
            constrained = gamma_brute(sub.graph, forced).value;
        } else {
            plain = gamma_tree_dp(sub.graph).value;
            constrained = gamma_tree_dp(sub.graph, forced).value;
        }
        note(r, t, Check::forced_supports, plain == constrained,
             "gamma " + std::to_string(plain) + " vs forced " +
                 std::to_string(constrained));
    }

    if (has(Check::deltas)) {
        Rng rng(tree_seed);
        auto cls = classify(t, t.n == 2 ? std::optional<int>(0) : std::nullopt);
        int before = br.gamma_subdivided;
        for (OpKind k : {OpKind::F1, OpKind::F2, OpKind::F3, OpKind::O1, OpKind::O2,
                         OpKind::O3}) {
            auto sites = legal_sites(t, cls, k);
            int picks = std::min<int>(3, static_cast<int>(sites.size()));
            for (int i = 0; i < picks; ++i) {
                int j = static_cast<int>(rng.below(sites.size() - i));
                std::swap(sites[i], sites[i + j]);
                OperationStep step{k, sites[i], 0};
                int expect = 1;
                if (k == OpKind::F2) expect = 2;
                if (k == OpKind::F3 || k == OpKind::O2) expect = 4;
                if (k == OpKind::O3) {
                    step.r = rng.range(2, 4);
                    expect = 4 * step.r;
                }
                Tree grown = apply_step(t, step, 0);
                int after = gamma_tree_dp(subdivide(grown).graph).value;
                note(r, t, Check::deltas, after - before == expect,
                     std::string(op_name(k)) + " at " + std::to_string(step.site) +
                         (step.r ? " r=" + std::to_string(step.r) : "") +
                         ": gamma went " + std::to_string(before) + " -> " +
                         std::to_string(after) + ", expected +" +
                         std::to_string(expect));
            }
        }
    }

    // Support uniqueness holds for the semi-supports that matter to the
    // spider reduction — those adjacent to a near-semi-support. It does NOT
    // hold for every semi-support of a qualifying tree: the spider with leg
    // lengths (3,3,1) attains the upper bound, has no strong leaves, and
    // both of its semi-supports touch two supports. Its near-semi-support
    // set is empty, so the scoped property is untouched.
    if (has(Check::semi_support_unique) && br.attains_upper) {
        auto cls = classify(t);
        if (cls.strong_leaves.empty() && !(t.n == 5 && is_path_graph(t))) {
            bool ok = true;
            std::string msg;
            for (int v : cls.semi_supports) {
                bool next_to_nss = false;
                for (int w : t.adj[v]) next_to_nss |= id_in(cls.near_semi_supports, w);
                if (!next_to_nss) continue;
                int sup_nbrs = 0;
                for (int w : t.adj[v]) sup_nbrs += id_in(cls.supports, w);
                if (sup_nbrs != 1) {
                    ok = false;
                    msg = "semi-support " + std::to_string(v) + " has " +
                          std::to_string(sup_nbrs) + " support neighbors";
                    break;
                }
            }
            note(r, t, Check::semi_support_unique, ok, msg);
        }
    }

    if (has(Check::oracle_vs_dp)) {
        if (t.n <= 13) {
            int b = gamma_brute(t, {}, 13).value;
            int d = gamma_tree_dp(t).value;
            note(r, t, Check::oracle_vs_dp, b == d,
                 "tree: brute " + std::to_string(b) + " dp " + std::to_string(d));
        }
        if (2 * t.n - 1 <= 19) {
            auto sub = subdivide(t);
            int b = gamma_brute(sub.graph).value;
            int d = gamma_tree_dp(sub.graph).value;
            note(r, t, Check::oracle_vs_dp, b == d,
                 "subdivision: brute " + std::to_string(b) + " dp " +
                     std::to_string(d));
        }
    }
}

}  // namespace detail

// Runs every configured check over every free tree with 2..max_n vertices.
// Deterministic including the sampled sites (seeds derive from the config
// seed and the tree's position, not from the worker layout); timings are
// the only run-to-run variation.
inline SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.max_n < 2 || cfg.max_n > 16)
        throw std::invalid_argument("run_sweep: max_n out of range [2,16]");
    if (cfg.workers < 1)
        throw std::invalid_argument("run_sweep: workers must be >= 1");
    SweepReport rep;
    rep.config = cfg;
    for (auto& [c, nm] : check_names())
        if (cfg.checks.count(c)) rep.tallies[nm];  // stable key set, zeroed

    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= cfg.max_n; ++n) {
        auto tn0 = std::chrono::steady_clock::now();
        auto trees = enumerate_free_trees(n);
        std::vector<detail::TreeResult> results(trees.size());
        auto work = [&](int wid) {
            for (std::size_t i = wid; i < trees.size(); i += cfg.workers)
                detail::check_one_tree(
                    trees[i], cfg,
                    mix_seed(cfg.seed, (static_cast<std::uint64_t>(n) << 32) | i),
                    results[i]);
        };
        if (cfg.workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        PerN row;
        row.n = n;
        row.trees = static_cast<long long>(trees.size());
        for (auto& res : results) {
            row.lower += res.lower;
            row.upper += res.upper;
            row.both += res.lower && res.upper;
            for (auto& [nm, cf] : res.tally) {
                rep.tallies[nm].checked += cf.first;
                rep.tallies[nm].failed += cf.second;
            }
            for (auto& ce : res.bad) rep.counterexamples.push_back(ce);
        }
        row.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - tn0)
                     .count();
        rep.per_n.push_back(row);
    }
    rep.total_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return rep;
}

inline nlohmann::ordered_json report_json(const SweepReport& rep) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto& cfg = j["config"];
    cfg["max_n"] = rep.config.max_n;
    cfg["checks"] = nlohmann::ordered_json::array();
    for (auto& [c, nm] : check_names())
        if (rep.config.checks.count(c)) cfg["checks"].push_back(nm);
    cfg["workers"] = rep.config.workers;
    cfg["seed"] = rep.config.seed;
    j["per_n"] = nlohmann::ordered_json::array();
    for (auto& row : rep.per_n)
        j["per_n"].push_back({{"n", row.n},
                              {"trees", row.trees},
                              {"lower", row.lower},
                              {"upper", row.upper},
                              {"both", row.both}});
    auto& checks = j["checks"];
    checks = nlohmann::ordered_json::object();
    for (auto& [nm, tally] : rep.tallies)
        checks[nm] = {{"checked", tally.checked},
                      {"passed", tally.checked - tally.failed},
                      {"failed", tally.failed}};
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (auto& ce : rep.counterexamples)
        j["counterexamples"].push_back({{"check", ce.check},
                                        {"n", ce.n},
                                        {"edges", ce.edges},
                                        {"graph6", ce.graph6},
                                        {"detail", ce.detail}});
    auto& tm = j["timings_ms"];
    tm = nlohmann::ordered_json::object();
    for (auto& row : rep.per_n) tm["n=" + std::to_string(row.n)] = row.ms;
    tm["total"] = rep.total_ms;
    return j;
}

inline std::string report_csv(const SweepReport& rep) {
    std::string out = "n,count,lower,upper,both\n";
    for (auto& row : rep.per_n)
        out += std::to_string(row.n) + "," + std::to_string(row.trees) + "," +
               std::to_string(row.lower) + "," + std::to_string(row.upper) + "," +
               std::to_string(row.both) + "\n";
    return out;
}

}  // namespace toid
