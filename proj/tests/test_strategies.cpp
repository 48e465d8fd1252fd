#include <doctest.h>

#include <memory>

#include "cnr/capture.hpp"
#include "cnr/strategies.hpp"

using namespace cnr;

namespace {

GameState cop_to_move(Vertex robber, Vertex cop) {
    GameState s;
    s.robber = robber;
    s.cop = cop;
    s.to_move = Side::Cop;
    return s;
}

GameState robber_to_move(Vertex robber, Vertex cop) {
    GameState s = cop_to_move(robber, cop);
    s.to_move = Side::Robber;
    return s;
}

}  // namespace

TEST_CASE("paper cop moves") {
    const auto& g = quadrant_graph();
    CHECK(paper_cop_move(cop_to_move({3, 4}, {2, 2}), g) == Vertex{6, 0});
    // Robber on the x-axis: jump past him along the axis.
    CHECK(paper_cop_move(cop_to_move({5, 0}, {6, 2}), g) == Vertex{12, 0});
    // Robber inside N[cop]: capture. (5,0) and (1,7) are adjacent.
    CHECK(paper_cop_move(cop_to_move({5, 0}, {1, 7}), g) == Vertex{5, 0});
    CHECK(paper_cop_move(cop_to_move({1, 5}, {3, 2}), g) == Vertex{1, 5});
    CHECK(paper_cop_move(cop_to_move({4, 0}, {9, 0}), g) == Vertex{4, 0});
    // (0, a) and (1, a) use the mirrored axis.
    CHECK(paper_cop_move(cop_to_move({0, 5}, {3, 7}), g) == Vertex{0, 13});
    CHECK(paper_cop_move(cop_to_move({1, 5}, {1, 7}), g) == Vertex{0, 13});
    // A robber whose last move raised his y-coordinate is chased along the y-axis.
    GameState s = cop_to_move({2, 9}, {6, 12});
    s.robber_previous = Vertex{4, 5};
    CHECK(paper_cop_move(s, g) == Vertex{0, 22});
    s.robber_previous = Vertex{1, 12};
    CHECK(paper_cop_move(s, g) == Vertex{9, 0});

    // Truncations too small for the jump are reported, never clamped.
    const FiniteGraph t = triangular_truncation(6);
    CHECK(paper_cop_move(cop_to_move({3, 3}, {2, 2}), t) == Vertex{6, 0});
    CHECK_THROWS_AS((void)paper_cop_move(cop_to_move({3, 3}, {3, 1}), t), StrategyError);
    CHECK_THROWS_AS((void)paper_cop_move(cop_to_move({1, 1}, {~Coord{0}, 2}), g), CoordinateOverflow);
}

TEST_CASE("paper cop move is always legal and forces the robber") {
    const auto& g = quadrant_graph();
    for (Coord a = 0; a <= 9; ++a)
        for (Coord b = 0; b <= 9; ++b)
            for (Coord c = 0; c <= 9; ++c)
                for (Coord d = 0; d <= 9; ++d) {
                    const Vertex r{a, b}, cop{c, d};
                    if (r.is_origin() || cop.is_origin() || r == cop) continue;
                    const Vertex next = paper_cop_move(cop_to_move(r, cop), g);
                    REQUIRE(g.in_closed_neighborhood(cop, next));
                    if (next == r) continue;
                    // Every robber escape leaves N[cop] only by lowering the forced coordinate.
                    const bool along_x = next.y == 0;
                    for (const Vertex& x : g.neighbors_within(r, Box::square(40))) {
                        if (g.in_closed_neighborhood(next, x)) continue;
                        CHECK((along_x ? x.y < r.y : x.x < r.x));
                    }
                    CHECK(g.in_closed_neighborhood(next, r));
                }
}

TEST_CASE("paper robber moves") {
    const auto& g = quadrant_graph();
    CHECK(paper_robber_move(robber_to_move({4, 4}, {1, 1}), g) == Vertex{4, 4});
    CHECK(paper_robber_move(robber_to_move({3, 6}, {5, 2}), g) == Vertex{6, 5});
    // Mirror image of the previous case, frozen from tests/oracles/derive_expected.py.
    CHECK(paper_robber_move(robber_to_move({6, 3}, {2, 5}), g) == Vertex{5, 6});
    // Adjacent along an axis: no escape, he stays.
    CHECK(paper_robber_move(robber_to_move({3, 0}, {7, 0}), g) == Vertex{3, 0});
    for (Coord a = 1; a <= 8; ++a)
        for (Coord b = 1; b <= 8; ++b)
            for (Coord c = 0; c <= 8; ++c)
                for (Coord d = 0; d <= 8; ++d) {
                    const Vertex r{a, b}, cop{c, d};
                    if (cop.is_origin() || r == cop) continue;
                    const Vertex next = paper_robber_move(robber_to_move(r, cop), g);
                    CHECK(g.in_closed_neighborhood(r, next));
                    // Escapes from a quadrant neighbour never land in N[cop] unless on the cop's axis.
                    if (g.adjacent(r, cop) && next != r && !(next.y == 0 && d == 0) && !(next.x == 0 && c == 0))
                        CHECK_FALSE(g.in_closed_neighborhood(cop, next));
                }
}

TEST_CASE("predicted bound") {
    CHECK(predicted_bound({5, 7}, Convention::RobberFirst) == 10);
    CHECK(predicted_bound({1, 0}, Convention::RobberFirst) == 4);
    CHECK(predicted_bound({0, 3}, Convention::CopFirst) == 7);
}

TEST_CASE("game runner") {
    const auto& g = quadrant_graph();
    PaperCop cop;
    PaperRobber robber;
    SUBCASE("paper cop catches the paper robber within the bound") {
        const Transcript t = run_game(g, cop, robber, {1, 1}, {5, 5}, Convention::RobberFirst, 100);
        CHECK(t.outcome == Outcome::Captured);
        CHECK(t.cop_moves <= 8);
        CHECK(check_transcript(g, t).empty());
        CHECK(transcript_from_json(transcript_to_json(t)) == t);
    }
    SUBCASE("axis start") {
        StayPut stay;
        for (Coord a = 1; a <= 10; ++a) {
            for (const Vertex start : {Vertex{a, 0}, Vertex{a, 1}, Vertex{0, a}, Vertex{1, a}}) {
                if (start == Vertex{3, 4}) continue;
                // Cop to move with the robber on an axis-form vertex: two cop moves suffice.
                for (Strategy* r : std::initializer_list<Strategy*>{&robber, &stay}) {
                    const Transcript t = run_game(g, cop, *r, {3, 4}, start, Convention::CopFirst, 100);
                    CHECK(t.outcome == Outcome::Captured);
                    CHECK(t.cop_moves <= 2);
                }
                const Transcript t = run_game(g, cop, stay, {3, 4}, start, Convention::RobberFirst, 100);
                CHECK(t.cop_moves <= 2);
            }
        }
        // Robber-first, the paper robber may step off the axis before the cop moves.
        const Transcript t = run_game(g, cop, robber, {3, 4}, {7, 0}, Convention::RobberFirst, 100);
        CHECK(t.moves.front().to == Vertex{6, 5});
    }
    SUBCASE("equal starts") {
        const Transcript t = run_game(g, cop, robber, {2, 2}, {2, 2}, Convention::CopFirst, 5);
        CHECK(t.outcome == Outcome::Captured);
        CHECK(t.cop_moves == 0);
        CHECK(t.moves.empty());
    }
    SUBCASE("move cap") {
        StayPut stay_cop;
        const Transcript t = run_game(g, stay_cop, robber, {1, 1}, {5, 5}, Convention::RobberFirst, 3);
        CHECK(t.outcome == Outcome::MoveCapReached);
        CHECK(t.cop_moves == 3);
        CHECK(check_transcript(g, t).empty());
    }
    SUBCASE("illegal strategy output aborts") {
        struct Teleport final : Strategy {
            std::string name() const override { return "teleport"; }
            Vertex next_move(const GameState& s, const GraphOracle&) override { return {s.mover_position().x + 1, 1}; }
        } teleport;
        CHECK_THROWS_AS((void)run_game(g, cop, teleport, {9, 9}, {1, 1}, Convention::RobberFirst, 10), IllegalMoveError);
    }
    SUBCASE("tampered transcripts are detected") {
        Transcript t = run_game(g, cop, robber, {1, 1}, {5, 5}, Convention::RobberFirst, 100);
        Transcript wrong = t;
        wrong.moves[1].to = Vertex{2, 2};
        CHECK_FALSE(check_transcript(g, wrong).empty());
        wrong = t;
        wrong.cop_moves += 1;
        CHECK_FALSE(check_transcript(g, wrong).empty());
    }
    CHECK(default_move_cap({2, 9}, {4, 1}) == 52);
}

TEST_CASE("survival of the paper robber") {
    const auto& g = quadrant_graph();
    PaperCop cop;
    PaperRobber robber;
    for (Coord n = 1; n <= 12; ++n) {
        for (const Vertex cop_start : {Vertex{1, 0}, Vertex{n + 3, 1}, Vertex{1, n + 4}, Vertex{2, 2}}) {
            const Vertex start{n + 1, n + 1};
            if (start == cop_start) continue;
            const Transcript t = run_game(g, cop, robber, cop_start, start, Convention::RobberFirst, 1000);
            CHECK(t.outcome == Outcome::Captured);
            CHECK(t.cop_moves >= n);
            CHECK(t.cop_moves <= predicted_bound(start, Convention::RobberFirst));
        }
    }
}

TEST_CASE("table strategies play optimally on small graphs") {
    auto p5 = std::make_shared<const FiniteGraph>(path_graph(5));
    auto solved = std::make_shared<const SolveResult>(solve_eta(*p5));
    TableStrategy cop(p5, solved, Side::Cop);
    TableStrategy robber(p5, solved, Side::Robber);
    StayPut stay;
    RandomWalker walker(3, 10);
    for (VertexId r = 0; r < 5; ++r) {
        for (Strategy* opponent : std::initializer_list<Strategy*>{&robber, &stay, &walker}) {
            const Transcript t = run_game(*p5, cop, *opponent, p5->position(2), p5->position(r), Convention::RobberFirst, 50);
            CHECK(t.outcome == Outcome::Captured);
            CHECK(t.cop_moves <= 2);
        }
    }

    auto t2 = std::make_shared<const FiniteGraph>(triangular_truncation(2));
    auto solved2 = std::make_shared<const SolveResult>(solve_eta(*t2));
    TableStrategy cop2(t2, solved2, Side::Cop);
    TableStrategy robber2(t2, solved2, Side::Robber);
    const Transcript t = run_game(*t2, cop2, robber2, {1, 0}, {1, 1}, Convention::RobberFirst, 50);
    CHECK(t.outcome == Outcome::Captured);
    CHECK(t.cop_moves == 2);

    const Transcript same = run_game(*t2, cop2, robber2, {1, 1}, {1, 1}, Convention::RobberFirst, 50);
    CHECK(same.cop_moves == 0);
    CHECK_THROWS_AS((void)cop2.next_move(cop_to_move({5, 5}, {1, 0}), *t2), StrategyError);
}

TEST_CASE("bounded minimax robber") {
    const auto& g = quadrant_graph();
    SUBCASE("horizon 1 avoids N[cop] when possible") {
        BoundedMinimaxRobber robber(1, 20);
        for (Coord a = 1; a <= 6; ++a)
            for (Coord b = 1; b <= 6; ++b)
                for (Coord c = 0; c <= 6; ++c)
                    for (Coord d = 0; d <= 6; ++d) {
                        const Vertex r{a, b}, cop{c, d};
                        if (cop.is_origin() || r == cop) continue;
                        bool avoidable = false;
                        for (const Vertex& x : g.neighbors_within(r, Box::square(20)))
                            avoidable = avoidable || !g.in_closed_neighborhood(cop, x);
                        avoidable = avoidable || !g.in_closed_neighborhood(cop, r);
                        const Vertex next = robber.next_move(robber_to_move(r, cop), g);
                        CHECK(g.in_closed_neighborhood(r, next));
                        if (avoidable) CHECK_FALSE(g.in_closed_neighborhood(cop, next));
                    }
    }
    SUBCASE("deterministic") {
        BoundedMinimaxRobber a(3, 40), b(3, 40);
        for (const Vertex r : {Vertex{4, 7}, Vertex{9, 2}, Vertex{5, 5}})
            CHECK(a.next_move(robber_to_move(r, {1, 0}), g) == b.next_move(robber_to_move(r, {1, 0}), g));
    }
    SUBCASE("survives the paper cop from the diagonal when the box holds the cop's jumps") {
        PaperCop cop;
        for (Coord n = 1; n <= 10; ++n) {
            BoundedMinimaxRobber robber(3, Coord{1} << (n + 5));
            const Transcript t = run_game(g, cop, robber, {1, 0}, {n + 1, n + 1}, Convention::RobberFirst, 1000);
            CHECK(t.outcome == Outcome::Captured);
            CHECK(t.cop_moves >= n);
            CHECK(t.cop_moves <= predicted_bound({n + 1, n + 1}, Convention::RobberFirst));
        }
    }
    SUBCASE("a small box caps survival once the cop jumps beyond it") {
        // The cop's x-coordinate roughly doubles per move; escapes need x beyond it.
        PaperCop cop;
        BoundedMinimaxRobber robber(3, 20);
        const Transcript t = run_game(g, cop, robber, {1, 0}, {6, 6}, Convention::RobberFirst, 1000);
        CHECK(t.outcome == Outcome::Captured);
        CHECK(t.cop_moves == 4);
    }
    CHECK_THROWS_AS((void)BoundedMinimaxRobber(0, 10), std::invalid_argument);
}

TEST_CASE("strategy factory") {
    StrategyOptions opts;
    CHECK(make_strategy("papercop", Side::Cop, opts)->name() == "papercop");
    CHECK(make_strategy("minimax", Side::Robber, opts)->name() == "minimax");
    CHECK_THROWS_AS((void)make_strategy("papercop", Side::Robber, opts), std::invalid_argument);
    CHECK_THROWS_AS((void)make_strategy("table", Side::Cop, opts), std::invalid_argument);
    CHECK_THROWS_AS((void)make_strategy("bogus", Side::Cop, opts), std::invalid_argument);
}
