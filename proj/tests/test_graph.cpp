#include <doctest.h>

#include <algorithm>

#include "cnr/finite_graph.hpp"
#include "cnr/graph_io.hpp"
#include "cnr/oracle.hpp"
#include "cnr/rng.hpp"

using namespace cnr;

namespace {

// Direct transcription of the edge rule, kept separate from the library.
bool rule(Vertex u, Vertex v) {
    if (u == v) return false;
    if ((u.x == 0 && v.x == 0) || (u.y == 0 && v.y == 0)) return true;
    return (u.x < v.x && u.y > v.y) || (u.x > v.x && u.y < v.y);
}

std::vector<std::pair<Vertex, Vertex>> coordinate_edges(const FiniteGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [a, b] : g.edges()) out.emplace_back(g.position(a), g.position(b));
    return out;
}

}  // namespace

TEST_CASE("quadrant adjacency examples") {
    CHECK(quadrant_adjacent({2, 0}, {5, 0}));
    CHECK(quadrant_adjacent({2, 5}, {4, 4}));
    CHECK_FALSE(quadrant_adjacent({1, 1}, {2, 2}));
    CHECK_FALSE(quadrant_adjacent({4, 4}, {4, 4}));
    CHECK(quadrant_adjacent({0, 3}, {0, 9}));
    CHECK_THROWS_AS((void)quadrant_adjacent({0, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)quadrant_adjacent({1, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("quadrant adjacency is symmetric, irreflexive and invariant under x=y reflection") {
    for (Coord a = 0; a <= 7; ++a)
        for (Coord b = 0; b <= 7; ++b)
            for (Coord c = 0; c <= 7; ++c)
                for (Coord d = 0; d <= 7; ++d) {
                    const Vertex u{a, b}, v{c, d};
                    if (u.is_origin() || v.is_origin()) continue;
                    CHECK(quadrant_adjacent(u, v) == rule(u, v));
                    CHECK(quadrant_adjacent(u, v) == quadrant_adjacent(v, u));
                    CHECK(quadrant_adjacent(u, v) == quadrant_adjacent(u.reflected(), v.reflected()));
                }
}

TEST_CASE("neighbors_within matches brute-force window scan") {
    const auto& g = quadrant_graph();
    const Box windows[] = {{0, 0, 9, 9}, {2, 1, 6, 8}, {0, 0, 0, 12}, {3, 0, 11, 0}, {5, 5, 4, 9}};
    for (Coord a = 0; a <= 8; ++a)
        for (Coord b = 0; b <= 8; ++b) {
            const Vertex v{a, b};
            if (v.is_origin()) continue;
            for (const Box& w : windows) {
                std::vector<Vertex> expected;
                if (!w.empty())
                    for (Coord x = w.x0; x <= w.x1; ++x)
                        for (Coord y = w.y0; y <= w.y1; ++y)
                            if (Vertex u{x, y}; !u.is_origin() && rule(u, v)) expected.push_back(u);
                CHECK(g.neighbors_within(v, w) == expected);
                CHECK(g.count_neighbors_within(v, w) == expected.size());
            }
        }
}

TEST_CASE("every vertex has unboundedly many neighbours") {
    const auto& g = quadrant_graph();
    for (Coord a = 0; a <= 20; ++a)
        for (Coord b = 0; b <= 20; ++b) {
            const Vertex v{a, b};
            if (v.is_origin()) continue;
            // Windows widening along the direction the neighbourhood is unbounded in.
            const Coord reach = 1000 + 2 * std::max(a, b);
            const Box window{0, 0, reach, reach};
            CHECK(g.count_neighbors_within(v, window) >= 1000);
        }
    CHECK(g.neighbors_within({4, 4}, Box{0, 0, 1003, 3}).size() == 4 * 999);
}

TEST_CASE("triangular truncation") {
    const FiniteGraph t1 = triangular_truncation(1);
    CHECK(t1.size() == 2);
    CHECK(t1.edge_count() == 1);

    const FiniteGraph t2 = triangular_truncation(2);
    CHECK(t2.size() == 5);
    const VertexId top = *t2.find({0, 2});
    CHECK(t2.neighbors(top).size() == 4);
    // Frozen from tests/oracles/derive_expected.py.
    const std::vector<std::pair<Vertex, Vertex>> expected{{{0, 1}, {0, 2}}, {{0, 1}, {1, 0}}, {{0, 1}, {2, 0}},
                                                          {{0, 2}, {1, 0}}, {{0, 2}, {1, 1}}, {{0, 2}, {2, 0}},
                                                          {{1, 0}, {2, 0}}, {{1, 1}, {2, 0}}};
    CHECK(coordinate_edges(t2) == expected);

    CHECK(triangular_truncation(3).size() == 9);
    for (Coord k = 1; k <= 15; ++k) {
        const FiniteGraph t = triangular_truncation(k);
        CHECK(t.size() == (k + 1) * (k + 2) / 2 - 1);
        CHECK(t.is_connected());
        for (VertexId i = 0; i < t.size(); ++i)
            for (VertexId j = 0; j < t.size(); ++j) CHECK(t.adjacent_ids(i, j) == rule(t.position(i), t.position(j)));
    }
}

TEST_CASE("square truncation may be disconnected") {
    const FiniteGraph s1 = square_truncation(1);
    CHECK(s1.size() == 3);
    REQUIRE(s1.edge_count() == 1);
    CHECK(coordinate_edges(s1).front() == std::pair<Vertex, Vertex>{{0, 1}, {1, 0}});
    CHECK(s1.neighbors(*s1.find({1, 1})).empty());
    CHECK_FALSE(s1.is_connected());
    CHECK(square_truncation(2).size() == 8);
}

TEST_CASE("induced subgraph") {
    const std::vector<Vertex> pair{{1, 0}, {0, 1}};
    CHECK(induced_subgraph(quadrant_graph(), pair).edge_count() == 1);
    CHECK(induced_subgraph(quadrant_graph(), std::vector<Vertex>{}).size() == 0);

    const std::vector<Vertex> three{{1, 1}, {2, 0}, {0, 2}};
    const FiniteGraph g = induced_subgraph(quadrant_graph(), three);
    const std::vector<std::pair<Vertex, Vertex>> expected{{{0, 2}, {1, 1}}, {{0, 2}, {2, 0}}, {{1, 1}, {2, 0}}};
    CHECK(coordinate_edges(g) == expected);

    const std::vector<Vertex> with_origin{{0, 0}, {1, 0}};
    CHECK_THROWS_AS((void)induced_subgraph(quadrant_graph(), with_origin), std::invalid_argument);
}

TEST_CASE("paths, cycles and random connected graphs") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(2).edge_count() == 1);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(4).edge_count() == 4);

    CHECK(random_connected_graph(1, 0.5, 7).size() == 1);
    CHECK(random_connected_graph(3, 1.0, 7).edge_count() == 3);
    CHECK(random_connected_graph(9, 0.3, 42) == random_connected_graph(9, 0.3, 42));
    SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(1 + rng.below(12));
        const FiniteGraph g = random_connected_graph(n, rng.unit(), rng.next());
        CHECK(g.size() == n);
        CHECK(g.is_connected());
    }
    CHECK_THROWS_AS((void)random_connected_graph(3, 1.5, 1), std::invalid_argument);
}

TEST_CASE("graph text format") {
    SUBCASE("round trip") {
        CHECK(parse_graph(serialize_graph(path_graph(5))) == path_graph(5));
        CHECK(parse_graph(serialize_graph(triangular_truncation(4))) == triangular_truncation(4));
        SplitMix64 rng(5);
        for (int i = 0; i < 50; ++i) {
            const FiniteGraph g = random_connected_graph(1 + rng.below(10), rng.unit(), rng.next());
            CHECK(parse_graph(serialize_graph(g)) == g);
        }
    }
    SUBCASE("canonical text") {
        CHECK(serialize_graph(path_graph(2)) == R"({"edges":[[0,1]],"version":1,"vertices":["v0","v1"]})");
        CHECK(graph_hash(path_graph(5)) == graph_hash(parse_graph(serialize_graph(path_graph(5)))));
        CHECK(graph_hash(path_graph(5)) != graph_hash(path_graph(6)));
    }
    SUBCASE("rejections carry a location") {
        auto where = [](std::string_view text) {
            try {
                (void)parse_graph(text);
            } catch (const GraphParseError& e) {
                return e.where();
            }
            return std::string("accepted");
        };
        CHECK(where(R"({"version":1,"vertices":[],"edges":[]})") == "vertices");
        CHECK(where(R"({"version":1,"vertices":["a","b"],"edges":[[0,1],[0,1]]})") == "edges[1]");
        CHECK(where(R"({"version":1,"vertices":["a","b"],"edges":[[1,0]]})") == "edges[0]");
        CHECK(where(R"({"version":1,"vertices":["a","b"],"edges":[[0,2]]})") == "edges[0]");
        CHECK(where(R"({"version":1,"vertices":[[1,0],[1,0]],"edges":[]})") == "vertices[1]");
        CHECK(where(R"({"version":2,"vertices":["a"],"edges":[]})") == "version");
        CHECK(where(R"({"version":1,"vertices":["a"],)") .starts_with("byte "));
    }
}

TEST_CASE("builtin graph sources") {
    CHECK(load_graph_source("builtin:p5") == path_graph(5));
    CHECK(load_graph_source("builtin:tri:3").size() == 9);
    CHECK(load_graph_source("builtin:sq:2").size() == 8);
    CHECK(load_graph_source("builtin:cycle:4").edge_count() == 4);
    CHECK_THROWS((void)load_graph_source("builtin:nope"));
    CHECK_THROWS((void)load_graph_source("/nonexistent/graph.json"));
}

TEST_CASE("coordinate arithmetic fails loudly on overflow") {
    constexpr Coord kMax = std::numeric_limits<Coord>::max();
    CHECK(checked_add(kMax - 1, 1) == kMax);
    CHECK_THROWS_AS((void)checked_add(kMax, 1), CoordinateOverflow);
    CHECK_THROWS_AS((void)checked_mul(kMax / 2 + 1, 2), CoordinateOverflow);
}
