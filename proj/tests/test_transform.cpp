#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpmatch/graph.hpp"
#include "cpmatch/transform.hpp"
#include "test_util.hpp"

using namespace cpmatch;

namespace {
WeightedGraph triangle() { return parse_graph("3 3\n0 1 2\n1 2 1\n2 0 1"); }

WeightedGraph five_cycle() {
    return parse_graph("5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 0 1");
}

OddCycleSet whole_cycle(const WeightedGraph& g, std::vector<int> verts) {
    OddCycleSet cs;
    cs.cycles.push_back(make_cycle(g, verts));
    return cs;
}
}  // namespace

TEST_CASE("triangle {2,1,1} collapses to three spokes of doubled weight (2,2,0)") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));

    CHECK(model.vertex_count_prime() == 4);
    CHECK(model.aux_vertex(0) == 3);
    REQUIRE(model.edge_count_prime() == 3);

    // w'(i_C, j) at 2x scale: j=0: w01 - w12 + w20 = 2; j=1: w01 + w12 - w20 = 2;
    // j=2: -w01 + w12 + w20 = 0.
    std::vector<std::int64_t> want{2, 2, 0};
    for (int pos = 0; pos < 3; ++pos) {
        const EdgePrime& e = model.edges_prime()[model.spoke_id(0, pos)];
        CHECK(e.kind == EdgePrimeKind::CYCLE_SPOKE);
        CHECK(e.w2 == want[pos]);
        CHECK(e.a == 3);  // spokes run from the auxiliary vertex
        CHECK(e.b == pos);
    }
    for (int id = 0; id < 3; ++id) CHECK(model.kept_id(id) == -1);
}

TEST_CASE("5-cycle all weights 1: every spoke weight is 1 at 2x scale") {
    WeightedGraph g = five_cycle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2, 3, 4}));
    REQUIRE(model.edge_count_prime() == 5);
    for (int pos = 0; pos < 5; ++pos) {
        // Sum over the 5 cycle edges of (-1)^d: 1+1-1+1-1 = 1.
        CHECK(model.edges_prime()[model.spoke_id(0, pos)].w2 == 1);
    }
}

TEST_CASE("kept edges keep their endpoints and double their weight") {
    // Triangle plus a pendant edge (2,3) of weight 5.
    WeightedGraph g = parse_graph("4 4\n0 1 2\n1 2 1\n2 0 1\n2 3 5");
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    REQUIRE(model.edge_count_prime() == 4);
    int kid = model.kept_id(3);
    REQUIRE(kid >= 0);
    const EdgePrime& e = model.edges_prime()[kid];
    CHECK(e.kind == EdgePrimeKind::KEPT);
    CHECK(e.a == 2);
    CHECK(e.b == 3);
    CHECK(e.w2 == 10);
    CHECK(model.cycle_of_edge(3) == -1);
    CHECK(model.cycle_of_edge(0) == 0);
}

TEST_CASE("cycle_distance matches the definitional formula") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 12, 20);
        OddCycleSet cs = testutil::random_cycle_set(rng, g);
        TransformedModel model(g, cs);
        for (int c = 0; c < cs.size(); ++c) {
            int k = cs.cycles[c].size();
            for (int j = 0; j < k; ++j)
                for (int a = 0; a < k; ++a)
                    CHECK(model.cycle_distance(c, j, a) ==
                          testutil::cyclic_edge_distance(k, j, a));
        }
    }
}

TEST_CASE("lift on the triangle: x=(1,0,0) lifts to spokes (1,1,0)") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    YAssignment y = lift_x_to_y(model, {Tern::ONE, Tern::ZERO, Tern::ZERO});
    CHECK(y[model.spoke_id(0, 0)] == Tern::ONE);
    CHECK(y[model.spoke_id(0, 1)] == Tern::ONE);
    CHECK(y[model.spoke_id(0, 2)] == Tern::ZERO);
}

TEST_CASE("lift rejects HALF entries") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    CHECK_THROWS_AS(lift_x_to_y(model, {Tern::HALF, Tern::ZERO, Tern::ZERO}),
                    std::invalid_argument);
}

TEST_CASE("projection on the triangle: spokes (1,1,0) project back to (1,0,0)") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    YAssignment y(3, Tern::ZERO);
    y[model.spoke_id(0, 0)] = Tern::ONE;
    y[model.spoke_id(0, 1)] = Tern::ONE;
    Projection p = project_y_to_x(model, y);
    REQUIRE(p.in_domain);
    CHECK(p.x == TernaryAssignment{Tern::ONE, Tern::ZERO, Tern::ZERO});
}

TEST_CASE("all-ONE spokes on a 5-cycle project to all-HALF cycle edges") {
    // The all-half fractional vertex of the cycle lifts to y_j = 1 for every
    // spoke (each cycle vertex is covered with total weight one); the signed
    // half-sums come back as 1/2 on every cycle edge.
    WeightedGraph g = five_cycle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2, 3, 4}));
    YAssignment y(5, Tern::ONE);
    Projection p = project_y_to_x(model, y);
    REQUIRE(p.in_domain);
    for (Tern t : p.x) CHECK(t == Tern::HALF);

    // All-half spokes, by contrast, leave the domain: five signed halves sum
    // to an odd multiple of 1/2, so x lands on quarters.
    Projection q = project_y_to_x(model, YAssignment(5, Tern::HALF));
    CHECK_FALSE(q.in_domain);
}

TEST_CASE("out-of-domain spoke pattern is flagged with its edges") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    // (1,0,0): x01 = (1-0+0)/2 = 1/2... actually signs: x_e = (y_j + y_j' - rest)/2
    // For edge (0,1): (1 + 0 - 0)/2 = 1/2 -> representable as HALF, in-domain.
    // Use (1,0,1): edge (0,1) gets (1+0-1)/2 = 0; edge (1,2): (0+1-1)/2 = 0;
    // edge (2,0): (1+1-0)/2 = 1. In-domain. Need a quarter: impossible with
    // integer spokes on a triangle, so use HALF mixes: (1, 1/2, 0):
    // edge (0,1): (1 + 1/2 - 0)/2 = 3/4 -> out of domain.
    YAssignment y(3, Tern::ZERO);
    y[model.spoke_id(0, 0)] = Tern::ONE;
    y[model.spoke_id(0, 1)] = Tern::HALF;
    Projection p = project_y_to_x(model, y);
    CHECK_FALSE(p.in_domain);
    CHECK(p.bad_edges[0]);
}

TEST_CASE("empty cycle set: transform is the identity at 2x scale and x=y") {
    std::mt19937_64 rng(5);
    WeightedGraph g = testutil::random_graph(rng, 10, 50);
    TransformedModel model(g, OddCycleSet{});
    REQUIRE(model.edge_count_prime() == g.edge_count());
    for (int id = 0; id < g.edge_count(); ++id) {
        CHECK(model.kept_id(id) == id);
        CHECK(model.edges_prime()[id].w2 == 2 * g.edge(id).w);
    }
    TernaryAssignment x(g.edge_count(), Tern::ZERO);
    if (g.edge_count() > 0) x[0] = Tern::ONE;
    CHECK(lift_x_to_y(model, x) == x);
    CHECK(project_y_to_x(model, x).x == x);
}

TEST_CASE("round trip project(lift(x)) == x for random matchings and cycle sets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 10, 30);
        OddCycleSet cs = testutil::random_cycle_set(rng, g);
        TransformedModel model(g, cs);
        int checked = 0;
        testutil::for_each_matching(g, [&](const TernaryAssignment& x) {
            if (checked++ > 40) return;  // cap per instance; exhaustive run is in acceptance
            YAssignment y = lift_x_to_y(model, x);
            Projection p = project_y_to_x(model, y);
            REQUIRE(p.in_domain);
            CHECK(p.x == x);
        });
    }
}

TEST_CASE("lift preserves the objective at 2x scale") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 9, 40);
        OddCycleSet cs = testutil::random_cycle_set(rng, g);
        TransformedModel model(g, cs);
        int checked = 0;
        testutil::for_each_matching(g, [&](const TernaryAssignment& x) {
            if (checked++ > 30) return;
            std::int64_t wx = 0;
            for (int id = 0; id < g.edge_count(); ++id)
                if (x[id] == Tern::ONE) wx += g.edge(id).w;
            YAssignment y = lift_x_to_y(model, x);
            std::int64_t wy = 0;
            for (int id = 0; id < model.edge_count_prime(); ++id)
                if (y[id] == Tern::ONE) wy += model.edges_prime()[id].w2;
            CHECK(wy == 2 * wx);
        });
    }
}

TEST_CASE("format_transformed emits a parseable instance") {
    WeightedGraph g = triangle();
    TransformedModel model(g, whole_cycle(g, {0, 1, 2}));
    std::string text = format_transformed(model);
    WeightedGraph h = parse_graph(text);
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 3);
    CHECK(format_provenance(model).find("spoke") != std::string::npos);
}
