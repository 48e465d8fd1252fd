#include "cnr/game.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace cnr {

using nlohmann::json;

std::string_view to_string(Convention c) { return c == Convention::CopFirst ? "copfirst" : "robberfirst"; }
std::string_view to_string(Side s) { return s == Side::Cop ? "cop" : "robber"; }

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view to_string(Outcome o) { return o == Outcome::Captured ? "captured" : "move_cap"; }

json vertex_json(const Vertex& v) { return json::array({v.x, v.y}); }

Vertex vertex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
        throw std::invalid_argument("expected [x, y] with natural coordinates");
    return {j[0].get<Coord>(), j[1].get<Coord>()};
}

}  // namespace

Convention parse_convention(std::string_view text) {
    const std::string t = lower(text);
    if (t == "copfirst") return Convention::CopFirst;
    if (t == "robberfirst") return Convention::RobberFirst;
    throw std::invalid_argument("unknown convention '" + std::string(text) + "' (expected copfirst or robberfirst)");
}

Side parse_side(std::string_view text) {
    const std::string t = lower(text);
    if (t == "cop") return Side::Cop;
    if (t == "robber") return Side::Robber;
    throw std::invalid_argument("unknown side '" + std::string(text) + "' (expected cop or robber)");
}

std::uint64_t default_move_cap(const Vertex& cop_start, const Vertex& robber_start) {
    const Coord m = std::max({cop_start.x, cop_start.y, robber_start.x, robber_start.y});
    return checked_add(checked_mul(4, m), 16);
}

namespace {

void apply(GameState& s, const MoveRecord& m) {
    if (m.by == Side::Cop) {
        s.cop = m.to;
        ++s.cop_moves;
        s.to_move = Side::Robber;
    } else {
        s.robber_previous = s.robber;
        s.robber = m.to;
        s.to_move = Side::Cop;
    }
}

}  // namespace

Transcript run_game(const GraphOracle& graph, Strategy& cop, Strategy& robber, const Vertex& cop_start,
                    const Vertex& robber_start, Convention convention, std::uint64_t move_cap) {
    if (!graph.contains(cop_start)) throw std::invalid_argument("cop start " + to_string(cop_start) + " is not in the graph");
    if (!graph.contains(robber_start))
        throw std::invalid_argument("robber start " + to_string(robber_start) + " is not in the graph");
    if (move_cap < 1) throw std::invalid_argument("move cap must be at least 1");

    Transcript t;
    t.convention = convention;
    t.cop_strategy = cop.name();
    t.robber_strategy = robber.name();
    t.cop_start = cop_start;
    t.robber_start = robber_start;

    GameState state;
    state.cop = cop_start;
    state.robber = robber_start;
    state.convention = convention;
    state.to_move = convention == Convention::CopFirst ? Side::Cop : Side::Robber;

    while (!state.captured() && state.cop_moves < move_cap) {
        Strategy& mover = state.to_move == Side::Cop ? cop : robber;
        const Vertex from = state.mover_position();
        const Vertex to = mover.next_move(state, graph);
        if (!graph.contains(to) || !graph.in_closed_neighborhood(from, to)) {
            throw IllegalMoveError(mover.name() + " (" + std::string(to_string(state.to_move)) + ") moved " +
                                   to_string(from) + " -> " + to_string(to) + ", which is not in the closed neighbourhood");
        }
        t.moves.push_back({state.to_move, from, to});
        apply(state, t.moves.back());
    }
    t.cop_moves = state.cop_moves;
    t.outcome = state.captured() ? Outcome::Captured : Outcome::MoveCapReached;
    return t;
}

GameState state_before(const Transcript& t, std::size_t i) {
    GameState s;
    s.cop = t.cop_start;
    s.robber = t.robber_start;
    s.convention = t.convention;
    s.to_move = t.convention == Convention::CopFirst ? Side::Cop : Side::Robber;
    for (std::size_t k = 0; k < i && k < t.moves.size(); ++k) apply(s, t.moves[k]);
    return s;
}

std::string check_transcript(const GraphOracle& graph, const Transcript& t) {
    if (!graph.contains(t.cop_start) || !graph.contains(t.robber_start)) return "start outside the graph";
    GameState s = state_before(t, 0);
    for (std::size_t k = 0; k < t.moves.size(); ++k) {
        const MoveRecord& m = t.moves[k];
        const std::string where = "move " + std::to_string(k) + ": ";
        if (s.captured()) return where + "move after capture";
        if (m.by != s.to_move) return where + "wrong side to move";
        if (m.from != s.mover_position()) return where + "from does not match the mover's position";
        if (!graph.contains(m.to) || !graph.in_closed_neighborhood(m.from, m.to)) return where + "illegal move";
        apply(s, m);
    }
    if (s.cop_moves != t.cop_moves) return "cop move count mismatch";
    const Outcome expected = s.captured() ? Outcome::Captured : Outcome::MoveCapReached;
    if (expected != t.outcome) return "outcome mismatch";
    return {};
}

std::string transcript_to_json(const Transcript& t) {
    json doc;
    doc["convention"] = to_string(t.convention);
    doc["cop_strategy"] = t.cop_strategy;
    doc["robber_strategy"] = t.robber_strategy;
    doc["starts"] = {{"cop", vertex_json(t.cop_start)}, {"robber", vertex_json(t.robber_start)}};
    json moves = json::array();
    for (const MoveRecord& m : t.moves)
        moves.push_back({{"by", to_string(m.by)}, {"from", vertex_json(m.from)}, {"to", vertex_json(m.to)}});
    doc["moves"] = std::move(moves);
    doc["outcome"] = to_string(t.outcome);
    doc["cop_moves"] = t.cop_moves;
    return doc.dump();
}

Transcript transcript_from_json(std::string_view text) {
    const json doc = json::parse(text);
    Transcript t;
    t.convention = parse_convention(doc.at("convention").get<std::string>());
    t.cop_strategy = doc.at("cop_strategy").get<std::string>();
    t.robber_strategy = doc.at("robber_strategy").get<std::string>();
    t.cop_start = vertex_from(doc.at("starts").at("cop"));
    t.robber_start = vertex_from(doc.at("starts").at("robber"));
    for (const json& m : doc.at("moves"))
        t.moves.push_back({parse_side(m.at("by").get<std::string>()), vertex_from(m.at("from")), vertex_from(m.at("to"))});
    const std::string outcome = doc.at("outcome").get<std::string>();
    if (outcome == "captured")
        t.outcome = Outcome::Captured;
    else if (outcome == "move_cap")
        t.outcome = Outcome::MoveCapReached;
    else
        throw std::invalid_argument("unknown outcome '" + outcome + "'");
    t.cop_moves = doc.at("cop_moves").get<std::uint64_t>();
    return t;
}

}  // namespace cnr
