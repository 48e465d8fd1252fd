#include <doctest.h>

#include <algorithm>

#include "cnr/capture.hpp"
#include "cnr/dismantle.hpp"
#include "cnr/rng.hpp"

using namespace cnr;

namespace {

VertexId id_of(const FiniteGraph& g, Vertex v) { return *g.find(v); }

bool closed_subset(const FiniteGraph& g, VertexId x, VertexId y) {
    for (VertexId z : g.closed_neighborhood(x))
        if (z != y && !g.adjacent_ids(y, z)) return false;
    return true;
}

}  // namespace

TEST_CASE("capture value ordering treats RobberWin as infinite") {
    const auto w = CaptureValue::robber_win();
    CHECK(CaptureValue::finite(3) < w);
    CHECK_FALSE(w < CaptureValue::finite(3));
    CHECK(std::max(CaptureValue::finite(9), w) == w);
    CHECK(std::min(CaptureValue::finite(9), w) == CaptureValue::finite(9));
    CHECK(w.to_string() == "RobberWin");
    CHECK(CaptureValue::from_raw(-1) == w);
}

TEST_CASE("path on five vertices") {
    const FiniteGraph p5 = path_graph(5);
    const SolveResult r = solve_eta(p5);
    CHECK(r.copwin);
    CHECK(r.eta_graph == CaptureValue::finite(2));
    CHECK(r.best_cop_start() == VertexId{2});
    CHECK(r.rho_graph == CaptureValue::finite(4));
    // Frozen from tests/oracles/derive_expected.py.
    const std::vector<std::int32_t> expected{0, 1, 2, 3, 4, 4, 0, 2, 3, 4, 4, 3, 0, 3, 4, 4, 3, 2, 0, 4, 4, 3, 2, 1, 0};
    CHECK(r.table.raw() == expected);
    CHECK(r.table.stages() == 4);
    CHECK(solve_eta_naive(p5) == r.table);
}

TEST_CASE("single vertex and the four-cycle") {
    const SolveResult one = solve_eta(path_graph(1));
    CHECK(one.copwin);
    CHECK(one.eta_graph == CaptureValue::finite(0));

    const FiniteGraph c4 = cycle_graph(4);
    const SolveResult r = solve_eta(c4);
    CHECK_FALSE(r.copwin);
    CHECK(r.eta_graph == CaptureValue::robber_win());
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = 0; v < 4; ++v) CHECK(r.table.at(u, v).is_finite() == (u == v));
    CHECK(solve_eta_naive(c4) == r.table);

    CHECK_THROWS_AS((void)solve_eta(FiniteGraph{}), std::invalid_argument);
}

TEST_CASE("triangular truncation k=2") {
    const FiniteGraph t2 = triangular_truncation(2);
    const SolveResult r = solve_eta(t2);
    CHECK(r.table.at(id_of(t2, {1, 1}), id_of(t2, {1, 0})) == CaptureValue::finite(2));
    CHECK(r.eta_graph == CaptureValue::finite(1));
    CHECK(r.best_cop_start() == id_of(t2, {0, 2}));
    CHECK(r.rho_graph == CaptureValue::finite(2));
}

TEST_CASE("disconnected graphs give RobberWin across components") {
    const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}};
    const FiniteGraph g = FiniteGraph::from_edges({"a", "b", "c"}, edges);
    const SolveResult r = solve_eta(g);
    CHECK_FALSE(r.copwin);
    CHECK(r.table.at(0, 1) == CaptureValue::finite(1));
    CHECK(r.table.at(2, 0) == CaptureValue::robber_win());
    CHECK(solve_eta_naive(g) == r.table);
}

TEST_CASE("cop-first time") {
    const FiniteGraph p5 = path_graph(5);
    const SolveResult r = solve_eta(p5);
    CHECK(cop_first_time(p5, r.table, 3, 3) == CaptureValue::finite(0));
    CHECK(cop_first_time(p5, r.table, 4, 0) == CaptureValue::finite(4));
    const FiniteGraph p3 = path_graph(3);
    CHECK(cop_first_time(p3, solve_eta(p3).table, 0, 1) == CaptureValue::finite(1));
    const FiniteGraph c4 = cycle_graph(4);
    CHECK(cop_first_time(c4, solve_eta(c4).table, 0, 2) == CaptureValue::robber_win());
}

TEST_CASE("table invariants on random graphs") {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 150; ++iter) {
        const auto n = static_cast<std::size_t>(1 + rng.below(8));
        const FiniteGraph g = random_connected_graph(n, rng.unit(), rng.next());
        const SolveResult r = solve_eta(g);
        const CaptureTable naive = solve_eta_naive(g);
        REQUIRE(naive == r.table);
        CHECK(naive.stages() == r.table.stages());
        for (VertexId u = 0; u < n; ++u) {
            CHECK(r.table.at(u, u) == CaptureValue::finite(0));
            for (VertexId v = 0; v < n; ++v) {
                const CaptureValue value = r.table.at(u, v);
                // Value 1 exactly when the cop's closed neighbourhood covers the robber's.
                if (u != v) CHECK((value == CaptureValue::finite(1)) == closed_subset(g, u, v));
                // Fixed point: eta = 1 + max_x min_y eta[x][y].
                if (u != v && value.is_finite()) {
                    CaptureValue worst = CaptureValue::finite(0);
                    for (VertexId x : g.closed_neighborhood(u)) {
                        CaptureValue best = CaptureValue::robber_win();
                        for (VertexId y : g.closed_neighborhood(v)) best = std::min(best, r.table.at(x, y));
                        worst = std::max(worst, best);
                    }
                    REQUIRE(worst.is_finite());
                    CHECK(value.moves() == worst.moves() + 1);
                }
                const CaptureValue cf = cop_first_time(g, r.table, u, v);
                if (u != v && value.is_finite()) CHECK(cf <= CaptureValue::finite(value.moves() + 1));
                // The cop policy realises the cop-first value.
                if (u != v && cf.is_finite()) CHECK(r.table.at(u, r.cop_move(u, v)).moves() + 1 == cf.moves());
            }
        }
        bool some_column_finite = false;
        for (VertexId v = 0; v < n; ++v) {
            bool all = true;
            for (VertexId u = 0; u < n; ++u) all = all && r.table.at(u, v).is_finite();
            some_column_finite = some_column_finite || all;
        }
        CHECK(r.copwin == some_column_finite);
        CHECK(r.copwin == dismantling_order(g).has_value());
    }
}

TEST_CASE("naive stages grow monotonically") {
    // Each stage only adds pairs: an entry settled at stage s stays settled.
    const FiniteGraph g = triangular_truncation(4);
    const CaptureTable naive = solve_eta_naive(g);
    std::vector<int> entering(static_cast<std::size_t>(naive.stages()) + 1, 0);
    for (std::int32_t raw : naive.raw()) {
        REQUIRE(raw >= 0);
        ++entering[static_cast<std::size_t>(raw)];
    }
    for (int count : entering) CHECK(count > 0);
    CHECK(naive == solve_eta(g).table);
}

TEST_CASE("larger truncations solve quickly and stay cop-win") {
    const FiniteGraph t = triangular_truncation(30);
    const SolveResult r = solve_eta(t);
    CHECK(r.copwin);
    CHECK(r.eta_graph == CaptureValue::finite(1));
    CHECK(r.best_cop_start() == id_of(t, {0, 30}));
}
