#include <doctest.h>

#include "cnr/capture.hpp"
#include "cnr/dismantle.hpp"

using namespace cnr;

TEST_CASE("dominated vertices") {
    CHECK(find_dominated_vertex(path_graph(2)) == Domination{0, 1});
    CHECK_FALSE(find_dominated_vertex(cycle_graph(4)).has_value());
    CHECK_FALSE(find_dominated_vertex(path_graph(1)).has_value());

    const FiniteGraph t2 = triangular_truncation(2);
    const VertexId top = *t2.find({0, 2});
    for (VertexId v = 0; v < t2.size(); ++v)
        if (v != top) CHECK(dominates(t2, top, v));
    CHECK(find_dominated_vertex(t2)->dominated == *t2.find({0, 1}));
}

TEST_CASE("dismantling orders") {
    const auto p5 = dismantling_order(path_graph(5));
    REQUIRE(p5.has_value());
    CHECK(p5->removed.size() == 4);
    CHECK(p5->removed == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(p5->remaining == 4);

    CHECK_FALSE(dismantling_order(cycle_graph(4)).has_value());
    CHECK_FALSE(dismantling_order(cycle_graph(5)).has_value());
    CHECK(dismantling_order(path_graph(1))->removed.empty());
    CHECK_FALSE(dismantling_order(FiniteGraph{}).has_value());

    for (Coord k = 1; k <= 12; ++k) {
        const FiniteGraph t = triangular_truncation(k);
        const auto order = dismantling_order(t);
        REQUIRE(order.has_value());
        CHECK(order->removed.size() + 1 == t.size());
        CHECK(solve_eta(t).copwin);
    }
}

TEST_CASE("construction order checker") {
    const auto& g = quadrant_graph();
    const std::vector<Vertex> base{{1, 0}};
    CHECK(verify_construction_order(g, base).valid);

    const std::vector<Vertex> prefix{{1, 0}, {0, 1}, {0, 2}, {1, 1}};
    const ConstructionCheck ok = verify_construction_order(g, prefix);
    CHECK(ok.valid);
    CHECK(ok.dominators[3] == Vertex{0, 2});

    const std::vector<Vertex> bad{{1, 0}, {1, 1}};
    const ConstructionCheck fail = verify_construction_order(g, bad);
    CHECK_FALSE(fail.valid);
    CHECK(fail.failure_index == std::size_t{1});

    const std::vector<Vertex> dup{{1, 0}, {1, 0}};
    CHECK_THROWS_AS((void)verify_construction_order(g, dup), std::invalid_argument);
    const std::vector<Vertex> foreign{{1, 0}, {0, 0}};
    CHECK_THROWS_AS((void)verify_construction_order(g, foreign), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_construction_order(g, std::vector<Vertex>{}), std::invalid_argument);
}

TEST_CASE("diagonal-sweep construction order") {
    const auto order = paper_construction_order(2);
    const std::vector<Vertex> first_five{{1, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(order == first_five);
    const ConstructionCheck check = verify_construction_order(quadrant_graph(), order);
    CHECK(check.valid);
    // Actual dominators at each prefix, frozen from tests/oracles/derive_expected.py.
    CHECK(check.dominators[1] == Vertex{1, 0});
    CHECK(check.dominators[2] == Vertex{0, 1});
    CHECK(check.dominators[3] == Vertex{0, 2});
    CHECK(check.dominators[4] == Vertex{0, 2});

    for (Coord k = 1; k <= 20; ++k) {
        const auto o = paper_construction_order(k);
        CHECK(o.size() == (k + 1) * (k + 2) / 2 - 1);
        CHECK(verify_construction_order(quadrant_graph(), o).valid);
        // The same order is valid inside the truncation it spans.
        CHECK(verify_construction_order(triangular_truncation(k), o).valid);
    }
    CHECK_THROWS_AS((void)paper_construction_order(0), std::invalid_argument);
}
