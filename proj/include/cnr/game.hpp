#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnr/oracle.hpp"

namespace cnr {

enum class Convention { CopFirst, RobberFirst };
enum class Side { Cop, Robber };

[[nodiscard]] std::string_view to_string(Convention c);
[[nodiscard]] std::string_view to_string(Side s);
/// Accepts "copfirst" / "robberfirst" (case-insensitive). Throws std::invalid_argument.
[[nodiscard]] Convention parse_convention(std::string_view text);
[[nodiscard]] Side parse_side(std::string_view text);

struct GameState {
    Vertex robber;
    Vertex cop;
    Side to_move = Side::Robber;
    std::uint64_t cop_moves = 0;
    Convention convention = Convention::RobberFirst;
    /// Robber position before his most recent move, if he has moved.
    std::optional<Vertex> robber_previous;

    [[nodiscard]] bool captured() const { return robber == cop; }
    [[nodiscard]] const Vertex& mover_position() const { return to_move == Side::Cop ? cop : robber; }
};

/// Raised when a strategy cannot produce a move (for example a target outside a truncation).
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the runner when a strategy returns a vertex outside N[mover].
class IllegalMoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// A vertex in the closed neighbourhood of the mover's position.
    [[nodiscard]] virtual Vertex next_move(const GameState& state, const GraphOracle& graph) = 0;
};

struct MoveRecord {
    Side by = Side::Cop;
    Vertex from;
    Vertex to;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

enum class Outcome { Captured, MoveCapReached };

struct Transcript {
    Convention convention = Convention::RobberFirst;
    std::string cop_strategy;
    std::string robber_strategy;
    Vertex cop_start;
    Vertex robber_start;
    std::vector<MoveRecord> moves;
    Outcome outcome = Outcome::MoveCapReached;
    std::uint64_t cop_moves = 0;

    friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// 4 * (largest start coordinate) + 16 cop moves.
[[nodiscard]] std::uint64_t default_move_cap(const Vertex& cop_start, const Vertex& robber_start);

/// Plays until capture or until the cop has made `move_cap` moves.
[[nodiscard]] Transcript run_game(const GraphOracle& graph, Strategy& cop, Strategy& robber, const Vertex& cop_start,
                                  const Vertex& robber_start, Convention convention, std::uint64_t move_cap);

/// Replays the moves from the starts, checking legality, alternation and the
/// recorded outcome. Returns an empty string when consistent, else a diagnostic.
[[nodiscard]] std::string check_transcript(const GraphOracle& graph, const Transcript& t);

/// The state just before move index `i` (i == moves.size() gives the final state).
[[nodiscard]] GameState state_before(const Transcript& t, std::size_t i);

[[nodiscard]] std::string transcript_to_json(const Transcript& t);
[[nodiscard]] Transcript transcript_from_json(std::string_view text);

}  // namespace cnr
