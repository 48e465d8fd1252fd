#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "cnr/capture.hpp"
#include "cnr/game.hpp"
#include "cnr/rng.hpp"

namespace cnr {

/// Cop strategy from the cop-win argument for the quadrant graph.
///
/// Captures when the robber is in N[cop]. Otherwise jumps to the x-axis just past
/// the robber, (a + c + 1, 0) for robber (a, b) and cop (c, d), which forces the
/// robber's y-coordinate down on every move he survives. The mirror move through
/// x = y is used when the robber sits on (0, a) or (1, a) with a >= 2, or when his
/// last move raised his y-coordinate (so his x-coordinate fell instead).
[[nodiscard]] Vertex paper_cop_move(const GameState& state, const GraphOracle& graph);

/// Robber strategy that survives long games: stays when not adjacent to the cop;
/// when the cop is down-right of him at (c, d) he moves to (c + 1, b - 1), and the
/// mirror image when the cop is up-left. Adjacent along an axis, he stays.
[[nodiscard]] Vertex paper_robber_move(const GameState& state, const GraphOracle& graph);

/// max(a, b) + 3 cop moves for the robber to move, one more when the cop moves first.
[[nodiscard]] std::uint64_t predicted_bound(const Vertex& robber, Convention convention);

class PaperCop final : public Strategy {
public:
    [[nodiscard]] std::string name() const override { return "papercop"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle& g) override { return paper_cop_move(s, g); }
};

class PaperRobber final : public Strategy {
public:
    [[nodiscard]] std::string name() const override { return "paperrobber"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle& g) override { return paper_robber_move(s, g); }
};

class StayPut final : public Strategy {
public:
    [[nodiscard]] std::string name() const override { return "stay"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle&) override { return s.mover_position(); }
};

/// Uniform over the mover's closed neighbourhood, restricted to [0, bound]^2 on
/// the quadrant graph (staying is always allowed).
class RandomWalker final : public Strategy {
public:
    RandomWalker(std::uint64_t seed, Coord bound) : rng_(seed), bound_(bound) {}
    [[nodiscard]] std::string name() const override { return "random"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle& g) override;

private:
    SplitMix64 rng_;
    Coord bound_;
};

/// Plays a solved table: the cop minimises, the robber maximises the capture value,
/// ties to the lowest vertex id (lexicographic order for coordinate graphs).
class TableStrategy final : public Strategy {
public:
    TableStrategy(std::shared_ptr<const FiniteGraph> graph, std::shared_ptr<const SolveResult> solved, Side side)
        : graph_(std::move(graph)), solved_(std::move(solved)), side_(side) {}
    [[nodiscard]] std::string name() const override { return "table"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle& g) override;

private:
    std::shared_ptr<const FiniteGraph> graph_;
    std::shared_ptr<const SolveResult> solved_;
    Side side_;
};

/// Depth-limited adversary on the quadrant graph. Searches the full game tree of
/// `horizon` robber moves (cop replies in between), with both players restricted to
/// coordinates <= bound, and maximises the number of cop moves survived inside the
/// horizon. Ties go to the move farthest from both axes, then lexicographically first.
///
/// Adjacency in the quadrant graph depends only on the relative order of the
/// coordinates and on which of them are zero, so each node enumerates one
/// representative per order type and memoises values on the compressed layout.
/// This is a bounded adversary, not an optimal infinite-graph robber.
class BoundedMinimaxRobber final : public Strategy {
public:
    BoundedMinimaxRobber(int horizon, Coord bound);
    [[nodiscard]] std::string name() const override { return "minimax"; }
    [[nodiscard]] Vertex next_move(const GameState& s, const GraphOracle& g) override;

    /// Survival value of the robber (to move) at `robber` against `cop` over `horizon` moves.
    [[nodiscard]] int evaluate(const Vertex& robber, const Vertex& cop, int horizon);
    [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }

private:
    int robber_value(const Vertex& r, const Vertex& c, int h);
    int cop_value(const Vertex& r, const Vertex& c, int h);

    int horizon_;
    Coord bound_;
    std::unordered_map<std::string, std::int8_t> memo_;
};

struct StrategyOptions {
    std::uint64_t seed = 1;
    /// Coordinate bound for the random walker and the minimax robber.
    Coord bound = 100;
    int horizon = 3;
    std::shared_ptr<const FiniteGraph> graph;
    std::shared_ptr<const SolveResult> solved;
};

/// Names: papercop, paperrobber, stay, random, minimax, table.
/// Throws std::invalid_argument for unknown names or a name that cannot play `side`.
[[nodiscard]] std::unique_ptr<Strategy> make_strategy(const std::string& name, Side side, const StrategyOptions& options);

}  // namespace cnr
