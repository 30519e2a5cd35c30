#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpmatch/cutting_plane.hpp"
#include "cpmatch/graph.hpp"
#include "cpmatch/oracle.hpp"
#include "test_util.hpp"

using namespace cpmatch;

namespace {
WeightedGraph triangle() { return parse_graph("3 3\n0 1 2\n1 2 1\n2 0 1"); }
}

TEST_CASE("single edge: round 1 returns MATCHING") {
    WeightedGraph g = parse_graph("2 1\n0 1 7");
    for (CPOutcome out : {cp_bp(g, 10, 5), cp_lp(g, 5)}) {
        CHECK(out.status == CPStatus::MATCHING);
        CHECK(out.weight == 7);
        CHECK(out.matching.edge_ids == std::vector<int>{0});
        CHECK(out.log.size() == 1);
        CHECK(out.cycles.empty());
    }
}

TEST_CASE("cp_bp repairs the triangle with exactly one cut") {
    WeightedGraph g = triangle();
    CPOutcome out = cp_bp(g, 1000, 10);
    CHECK(out.status == CPStatus::MATCHING);
    CHECK(out.weight == 2);
    CHECK(out.matching.edge_ids == std::vector<int>{0});
    REQUIRE(out.cycles.size() == 1);
    CHECK(out.cycles.cycles[0].size() == 3);
    REQUIRE(out.log.size() == 2);
    // Round 1 runs on the bare model and decodes all HALF.
    CHECK(out.log[0].count_half == 3);
    CHECK(out.log[1].cycle_count == 1);
}

TEST_CASE("cp_lp solves the triangle at weight 2") {
    CPOutcome out = cp_lp(triangle(), 10);
    CHECK(out.status == CPStatus::MATCHING);
    CHECK(out.weight == 2);
    CHECK(out.cycles.size() <= 1);
}

TEST_CASE("cp_lp on the all-ones 5-cycle: one cut, then a 2-edge matching") {
    WeightedGraph g = parse_graph("5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 0 1");
    CPOutcome out = cp_lp(g, 10);
    CHECK(out.status == CPStatus::MATCHING);
    CHECK(out.weight == 2);
    CHECK(out.matching.edge_ids.size() == 2);
    CHECK(out.cycles.size() == 1);
    CHECK(out.log.size() == 2);
}

TEST_CASE("budget of one round on the triangle exhausts") {
    CPOutcome out = cp_bp(triangle(), 1000, 1);
    CHECK(out.status == CPStatus::BUDGET_EXHAUSTED);
    CHECK(out.cycles.size() == 1);  // the cut was found before the budget ran out
}

TEST_CASE("iteration budget below two is rejected") {
    CHECK_THROWS_AS(cp_bp(triangle(), 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(cp_lp(triangle(), 0), std::invalid_argument);
}

TEST_CASE("bipartite instances terminate with a verified matching") {
    std::mt19937_64 rng(73);
    int tested = 0;
    for (int trial = 0; trial < 120 && tested < 40; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 10, 40);
        if (g.edge_count() > 30) continue;  // brute-force oracle cap
        OddCycle c;
        if (find_odd_cycle(g, {}, {}, c)) continue;  // keep bipartite ones
        ++tested;
        CPOutcome out = cp_lp(g, default_max_rounds(g));
        REQUIRE(out.status == CPStatus::MATCHING);
        CHECK(out.weight == brute_force_mwm(g).best_objective);
        CHECK(out.cycles.empty());
    }
    CHECK(tested >= 15);
}

TEST_CASE("cp_lp matchings are optimal on random small instances") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 10, 60);
        if (g.edge_count() > 30) continue;  // brute-force oracle cap
        CPOutcome out = cp_lp(g, default_max_rounds(g));
        if (out.status != CPStatus::MATCHING) continue;
        CHECK(out.weight == brute_force_mwm(g).best_objective);
        CHECK(validate_matching(g, out.matching).ok);
        CHECK(verify_optimal_matching(g, out));
    }
}

TEST_CASE("cp_bp matchings are valid and never beat the optimum") {
    std::mt19937_64 rng(83);
    int matched = 0;
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 10, 60);
        if (g.edge_count() > 30) continue;  // brute-force oracle cap
        CPOutcome out = cp_bp(g, 300, default_max_rounds(g));
        if (out.status != CPStatus::MATCHING) continue;
        ++matched;
        MatchingCheck chk = validate_matching(g, out.matching);
        CHECK(chk.ok);
        CHECK(chk.total_weight == out.weight);
        CHECK(out.weight <= brute_force_mwm(g).best_objective);
    }
    CHECK(matched >= 40);
}

TEST_CASE("cycle sets grow monotonically and stay edge-disjoint") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 12, 8);
        CPOutcome out = cp_bp(g, 200, default_max_rounds(g));
        for (size_t r = 0; r < out.log.size(); ++r)
            CHECK(out.log[r].cycle_count == static_cast<int>(r));
        CHECK_NOTHROW(validate_cycle_set(g, out.cycles));
    }
}

TEST_CASE("classification of the pinned instances") {
    CHECK(classify_instance(parse_graph("2 1\n0 1 7")) == InstanceClass::BASE_TIGHT);
    CHECK(classify_instance(triangle()) == InstanceClass::SOLVED_WITH_CUTS);
}

TEST_CASE("cp loops are deterministic") {
    WeightedGraph g = generate_instance(14, 0.5, 1000, 21);
    CPOutcome a = cp_bp(g, 200, default_max_rounds(g));
    CPOutcome b = cp_bp(g, 200, default_max_rounds(g));
    CHECK(a.status == b.status);
    CHECK(a.weight == b.weight);
    CHECK(a.x == b.x);
    CHECK(a.cycles.size() == b.cycles.size());
}
