#include <doctest.h>

#include <map>

#include "toid/enumerate.hpp"

using namespace toid;

TEST_CASE("free tree counts") {
    const long long expect[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n)
        CHECK(enumerate_free_trees(n).size() == static_cast<std::size_t>(expect[n]));
    CHECK_THROWS_AS(enumerate_free_trees(0), std::invalid_argument);
}

TEST_CASE("four-vertex shapes") {
    auto ts = enumerate_free_trees(4);
    REQUIRE(ts.size() == 2);
    // largest canonical level sequence first: the path precedes the star
    CHECK(is_path_graph(ts[0]));
    CHECK(ts[1].degree(0) == 3);  // the star, rooted at its center
}

TEST_CASE("enumeration matches a Pruefer dedupe oracle") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> canon;
        std::vector<int> seq(std::max(0, n - 2), 0);
        while (true) {
            canon.insert(canonical_form(from_prufer(seq)));
            int i = static_cast<int>(seq.size()) - 1;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0) break;
            ++seq[i];
        }
        auto mine = enumerate_free_trees(n);
        CHECK(mine.size() == canon.size());
        // and every enumerated tree is one of them, each exactly once
        std::set<std::string> got;
        for (const auto& t : mine) got.insert(canonical_form(t));
        CHECK(got == canon);
    }
}

TEST_CASE("member search") {
    auto lower5 = find_members(5, MemberFilter::lower);
    auto upper5 = find_members(5, MemberFilter::upper);
    auto both5 = find_members(5, MemberFilter::both);
    auto neither5 = find_members(5, MemberFilter::neither);
    CHECK(lower5.size() == 2);
    CHECK(upper5.size() == 2);
    REQUIRE(both5.size() == 1);
    CHECK(both5[0].degree(0) == 4);  // the star
    CHECK(neither5.empty());
    CHECK(find_members(6, MemberFilter::neither).size() == 1);
}

TEST_CASE("sweep is clean and deterministic") {
    SweepConfig cfg;
    cfg.max_n = 8;
    auto rep = run_sweep(cfg);
    CHECK(rep.clean());
    REQUIRE(rep.per_n.size() == 7);
    CHECK(rep.per_n[0].trees == 1);
    CHECK(rep.per_n[6].trees == 23);
    CHECK(rep.per_n[6].lower == 11);
    CHECK(rep.per_n[6].upper == 5);
    CHECK(rep.per_n[6].both == 1);
    for (auto& [name, tally] : rep.tallies) {
        CHECK(tally.checked > 0);
        CHECK(tally.failed == 0);
    }
    CHECK(rep.tallies.at("bounds").checked == 47);  // trees on 2..8 vertices

    // a second run with four workers produces the identical report
    SweepConfig par = cfg;
    par.workers = 4;
    auto rep2 = run_sweep(par);
    CHECK(rep2.clean());
    for (auto& [name, tally] : rep.tallies) {
        CHECK(rep2.tallies.at(name).checked == tally.checked);
        CHECK(rep2.tallies.at(name).failed == tally.failed);
    }
    auto strip = [](nlohmann::ordered_json j) {
        j.erase("timings_ms");
        j["config"].erase("workers");
        return j.dump();
    };
    CHECK(strip(report_json(rep)) == strip(report_json(rep2)));
}

TEST_CASE("sweep respects the check selection") {
    SweepConfig cfg;
    cfg.max_n = 6;
    cfg.checks = {Check::bounds, Check::oracle_vs_dp};
    auto rep = run_sweep(cfg);
    CHECK(rep.clean());
    CHECK(rep.tallies.size() == 2);
    CHECK(rep.tallies.count("bounds") == 1);
    CHECK(rep.tallies.count("deltas") == 0);
}

TEST_CASE("reports") {
    SweepConfig cfg;
    cfg.max_n = 5;
    auto rep = run_sweep(cfg);
    auto j = report_json(rep);
    CHECK(j["schema_version"] == 1);
    CHECK(j["config"]["max_n"] == 5);
    CHECK(j["per_n"].size() == 4);
    CHECK(j["per_n"][3]["n"] == 5);
    CHECK(j["per_n"][3]["trees"] == 3);
    CHECK(j["counterexamples"].empty());
    CHECK(j["checks"]["bounds"]["failed"] == 0);
    CHECK(report_csv(rep) ==
          "n,count,lower,upper,both\n"
          "2,1,1,1,1\n"
          "3,1,1,1,1\n"
          "4,2,2,1,1\n"
          "5,3,2,2,1\n");
}

TEST_CASE("check names round trip") {
    for (auto& [c, nm] : check_names()) CHECK(check_from_name(nm) == c);
    CHECK_THROWS_AS(check_from_name("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(SweepConfig{.max_n = 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(SweepConfig{.max_n = 6, .workers = 0}),
                    std::invalid_argument);
}
