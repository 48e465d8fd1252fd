#include "cnr/service.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "cnr/graph_io.hpp"

namespace cnr {

using nlohmann::json;

std::string_view to_string(SessionStatus s) {
    switch (s) {
        case SessionStatus::AwaitingHuman: return "AwaitingHuman";
        case SessionStatus::AwaitingMachine: return "AwaitingMachine";
        case SessionStatus::Finished: return "Finished";
    }
    return "?";
}

namespace {

constexpr Coord kMaxCoord = std::numeric_limits<Coord>::max();
constexpr Box kDefaultViewport{0, 0, 20, 20};

json vertex_json(const std::optional<Vertex>& v) {
    if (!v) return nullptr;
    return json::array({v->x, v->y});
}

json move_json(const MoveRecord& m, bool placement) {
    return {{"by", to_string(m.by)}, {"from", placement ? json(nullptr) : vertex_json(m.from)}, {"to", vertex_json(m.to)}};
}

Side other(Side s) { return s == Side::Cop ? Side::Robber : Side::Cop; }

std::uint64_t builtin_size(const std::string& source, std::string_view kind) {
    const std::string prefix = "builtin:" + std::string(kind) + ":";
    if (!source.starts_with(prefix)) return 0;
    std::uint64_t value = 0;
    const char* first = source.data() + prefix.size();
    const char* last = source.data() + source.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ServiceError(400, "invalid_spec", "malformed graph '" + source + "'");
    return value;
}

// Sessions accept only builtin graphs small enough to solve at creation.
FiniteGraph session_graph(const std::string& source, const ServiceConfig& config) {
    if (!source.starts_with("builtin:")) throw ServiceError(400, "invalid_spec", "graph must be 'quadrant' or a builtin source");
    const struct {
        std::string_view kind;
        std::uint64_t limit;
    } limits[] = {{"tri", config.max_truncation}, {"sq", 14}, {"path", 200}, {"cycle", 200}};
    for (const auto& [kind, limit] : limits)
        if (const std::uint64_t size = builtin_size(source, kind); size > limit)
            throw ServiceError(400, "invalid_spec", "graph '" + source + "' exceeds the session size limit");
    try {
        return load_graph_source(source);
    } catch (const std::exception& e) {
        throw ServiceError(400, "invalid_spec", e.what());
    }
}

}  // namespace

SessionSpec session_spec_from_json(const json& body) {
    if (!body.is_object()) throw ServiceError(400, "invalid_spec", "session spec must be a JSON object");
    SessionSpec spec;
    try {
        spec.graph = body.value("graph", spec.graph);
        if (body.contains("role")) spec.human = parse_side(body.at("role").get<std::string>());
        spec.strategy = body.value("strategy", std::string(spec.human == Side::Robber ? "papercop" : "paperrobber"));
        if (body.contains("convention")) spec.convention = parse_convention(body.at("convention").get<std::string>());
    } catch (const json::exception& e) {
        throw ServiceError(400, "invalid_spec", e.what());
    } catch (const std::invalid_argument& e) {
        throw ServiceError(400, "invalid_spec", e.what());
    }
    return spec;
}

Session::Session(std::string id, SessionSpec spec, const ServiceConfig& config)
    : id_(std::move(id)), spec_(std::move(spec)), config_(config) {
    if (spec_.graph != "quadrant") {
        finite_ = std::make_shared<const FiniteGraph>(session_graph(spec_.graph, config_));
        if (finite_->size() == 0) throw ServiceError(400, "invalid_spec", "graph has no vertices");
        solved_ = std::make_shared<const SolveResult>(solve_eta(*finite_));
    }
    const Side machine_side = other(spec_.human);
    if (spec_.strategy == "table" && !finite_)
        throw ServiceError(400, "invalid_spec", "the table strategy needs a finite graph");
    if (spec_.strategy == "minimax" && finite_)
        throw ServiceError(400, "invalid_spec", "the minimax robber plays on the quadrant graph only");
    StrategyOptions options;
    options.seed = config_.seed ^ std::hash<std::string>{}(id_);
    options.bound = 50;
    options.graph = finite_;
    options.solved = solved_;
    try {
        machine_ = make_strategy(spec_.strategy, machine_side, options);
    } catch (const std::invalid_argument& e) {
        throw ServiceError(400, "invalid_spec", e.what());
    }
    transcript_.convention = spec_.convention;
    transcript_.cop_strategy = machine_side == Side::Cop ? machine_->name() : "human";
    transcript_.robber_strategy = machine_side == Side::Robber ? machine_->name() : "human";
    machine_turns();
}

const GraphOracle& Session::graph() const {
    if (finite_) return *finite_;
    return quadrant_graph();
}

bool Session::placed(Side side) const { return side == Side::Cop ? cop_.has_value() : robber_.has_value(); }

Side Session::to_move() const {
    if (!cop_) return Side::Cop;
    if (!robber_) return Side::Robber;
    if (transcript_.moves.empty()) return spec_.convention == Convention::CopFirst ? Side::Cop : Side::Robber;
    return other(transcript_.moves.back().by);
}

GameState Session::game_state() const {
    GameState s;
    s.robber = *robber_;
    s.cop = *cop_;
    s.to_move = to_move();
    s.cop_moves = cop_moves_;
    s.convention = spec_.convention;
    s.robber_previous = robber_previous_;
    return s;
}

Vertex Session::suggested_start(Side side) const {
    if (side == Side::Cop) {
        if (solved_) return finite_->position(solved_->best_cop_start().value_or(0));
        return {1, 0};
    }
    const Vertex c = *cop_;
    if (solved_) {
        const auto cop = *finite_->find(c);
        VertexId best = 0;
        for (VertexId u = 1; u < finite_->size(); ++u)
            if (solved_->table.at(u, cop) > solved_->table.at(best, cop)) best = u;
        return finite_->position(best);
    }
    const Coord s = checked_add(std::max(c.x, c.y), 3);
    return {s, s};
}

Vertex Session::machine_start() const { return suggested_start(other(spec_.human)); }

void Session::place(Side side, const Vertex& v) {
    if (side == Side::Cop) {
        cop_ = v;
        transcript_.cop_start = v;
    } else {
        robber_ = v;
        transcript_.robber_start = v;
    }
    if (cop_ && robber_) {
        if (spec_.strategy == "minimax") {
            const Coord bound = 4 * std::max({cop_->x, cop_->y, robber_->x, robber_->y});
            machine_ = std::make_unique<BoundedMinimaxRobber>(3, bound);
        }
        if (*cop_ == *robber_) {
            status_ = SessionStatus::Finished;
            transcript_.outcome = Outcome::Captured;
        }
    }
}

void Session::apply(Side side, const Vertex& to) {
    if (side == Side::Cop) {
        transcript_.moves.push_back({Side::Cop, *cop_, to});
        cop_ = to;
        ++cop_moves_;
        transcript_.cop_moves = cop_moves_;
    } else {
        transcript_.moves.push_back({Side::Robber, *robber_, to});
        robber_previous_ = robber_;
        robber_ = to;
    }
    if (*cop_ == *robber_) {
        status_ = SessionStatus::Finished;
        transcript_.outcome = Outcome::Captured;
    } else if (cop_moves_ >= config_.max_cop_moves) {
        status_ = SessionStatus::Finished;
        transcript_.outcome = Outcome::MoveCapReached;
        finished_by_cap_ = true;
    }
}

void Session::machine_turns() {
    const Side machine_side = other(spec_.human);
    while (status_ != SessionStatus::Finished && to_move() == machine_side) {
        status_ = SessionStatus::AwaitingMachine;
        if (!placed(machine_side)) {
            const Vertex start = machine_start();
            place(machine_side, start);
            last_machine_move_ = MoveRecord{machine_side, start, start};
            last_machine_placement_ = true;
            continue;
        }
        const GameState s = game_state();
        const Vertex from = s.mover_position();
        const Vertex to = machine_->next_move(s, graph());
        if (!graph().in_closed_neighborhood(from, to))
            throw ServiceError(500, "machine_illegal_move", machine_->name() + " returned an illegal move");
        apply(machine_side, to);
        last_machine_move_ = MoveRecord{machine_side, from, to};
        last_machine_placement_ = false;
    }
    if (status_ != SessionStatus::Finished) status_ = SessionStatus::AwaitingHuman;
}

void Session::check_human_target(const Vertex& to) const {
    if (status_ == SessionStatus::Finished) throw ServiceError(409, "finished", "the game is over");
    if (to_move() != spec_.human) throw ServiceError(409, "wrong_turn", "it is not the human's turn");
    if (!finite_ && (to.x > config_.coordinate_cap || to.y > config_.coordinate_cap))
        throw ServiceError(422, "coordinate_cap",
                           "coordinates above " + std::to_string(config_.coordinate_cap) + " are not playable");
    if (!graph().contains(to)) throw ServiceError(422, "illegal_move", to_string(to) + " is not a vertex");
    if (!placed(spec_.human)) return;
    const Vertex& from = spec_.human == Side::Cop ? *cop_ : *robber_;
    if (!graph().in_closed_neighborhood(from, to))
        throw ServiceError(422, "illegal_move", to_string(to) + " is not in the closed neighbourhood of " + to_string(from));
}

json Session::post_move(const Vertex& to, const std::optional<Box>& viewport) {
    std::lock_guard lock(mutex_);
    check_human_target(to);
    const auto cop = cop_;
    const auto robber = robber_;
    const auto previous = robber_previous_;
    const auto transcript = transcript_;
    const auto moves = cop_moves_;
    const auto last = last_machine_move_;
    const bool last_placement = last_machine_placement_;
    try {
        if (!placed(spec_.human)) {
            place(spec_.human, to);
        } else {
            apply(spec_.human, to);
        }
        machine_turns();
    } catch (const std::exception& e) {
        cop_ = cop;
        robber_ = robber;
        robber_previous_ = previous;
        transcript_ = transcript;
        cop_moves_ = moves;
        last_machine_move_ = last;
        last_machine_placement_ = last_placement;
        status_ = SessionStatus::AwaitingHuman;
        finished_by_cap_ = false;
        if (dynamic_cast<const ServiceError*>(&e)) throw;
        throw ServiceError(409, "machine_cannot_move", e.what());
    }
    return view(viewport.value_or(kDefaultViewport));
}

json Session::state(const std::optional<Box>& viewport) const {
    std::lock_guard lock(mutex_);
    if (!viewport && !finite_) throw ServiceError(400, "viewport_required", "the quadrant graph needs x0, y0, x1, y1");
    return view(viewport);
}

SessionStatus Session::status() const {
    std::lock_guard lock(mutex_);
    return status_;
}

json Session::hint() const {
    std::lock_guard lock(mutex_);
    if (status_ == SessionStatus::Finished) throw ServiceError(409, "finished", "the game is over");
    const Side side = spec_.human;
    if (!placed(side)) return {{"vertex", vertex_json(suggested_start(side))}, {"strategy", solved_ ? "table" : side == Side::Cop ? "papercop" : "paperrobber"}};
    const GameState s = game_state();
    Vertex v;
    std::string name;
    if (solved_) {
        const VertexId u = *finite_->find(s.robber), c = *finite_->find(s.cop);
        v = finite_->position(side == Side::Cop ? solved_->cop_move(u, c) : solved_->robber_move(u, c));
        name = "table";
    } else {
        try {
            v = side == Side::Cop ? paper_cop_move(s, graph()) : paper_robber_move(s, graph());
        } catch (const std::exception& e) {
            throw ServiceError(409, "no_hint", e.what());
        }
        name = side == Side::Cop ? "papercop" : "paperrobber";
    }
    return {{"vertex", vertex_json(v)}, {"strategy", name}};
}

json Session::view(const std::optional<Box>& viewport) const {
    const bool finished = status_ == SessionStatus::Finished;
    const Side side = to_move();
    const bool human_turn = !finished && side == spec_.human;

    Box window{0, 0, kMaxCoord, kMaxCoord};
    if (viewport) {
        if (viewport->empty()) throw ServiceError(400, "bad_viewport", "viewport is empty");
        if (viewport->area() > config_.max_viewport_area)
            throw ServiceError(400, "viewport_too_large", "viewport covers more than " + std::to_string(config_.max_viewport_area) + " cells");
        window = *viewport;
    }
    const Box playable = finite_ ? Box{0, 0, kMaxCoord, kMaxCoord} : Box::square(config_.coordinate_cap);
    const Box shown = window.intersect(playable);

    json legal = json::array();
    Coord total = 0;
    if (human_turn) {
        if (!placed(spec_.human)) {
            if (finite_) {
                total = finite_->size();
                for (VertexId i = 0; i < finite_->size(); ++i)
                    if (shown.contains(finite_->position(i))) legal.push_back(vertex_json(finite_->position(i)));
            } else {
                total = playable.area() - 1;
                if (!shown.empty())
                    for (Coord x = shown.x0; x <= shown.x1; ++x)
                        for (Coord y = shown.y0; y <= shown.y1; ++y)
                            if (x || y) legal.push_back(json::array({x, y}));
            }
        } else {
            const Vertex from = spec_.human == Side::Cop ? *cop_ : *robber_;
            std::vector<Vertex> options;
            if (!shown.empty()) options = graph().neighbors_within(from, shown);
            if (shown.contains(from)) options.insert(std::lower_bound(options.begin(), options.end(), from), from);
            for (const Vertex& v : options) legal.push_back(vertex_json(v));
            if (finite_) {
                total = finite_->neighbors(*finite_->find(from)).size() + 1;
            } else {
                total = checked_add(static_cast<const QuadrantGraph&>(graph()).count_neighbors_within(from, playable), 1);
            }
        }
    }

    json doc;
    doc["id"] = id_;
    doc["graph"] = spec_.graph;
    doc["convention"] = to_string(spec_.convention);
    doc["human_role"] = to_string(spec_.human);
    doc["machine_strategy"] = machine_->name();
    doc["status"] = to_string(status_);
    doc["phase"] = finished ? "finished" : (cop_ && robber_) ? "play" : "choose_start";
    doc["to_move"] = finished ? json(nullptr) : json(to_string(side));
    doc["cop"] = vertex_json(cop_);
    doc["robber"] = vertex_json(robber_);
    doc["cop_moves"] = cop_moves_;
    if (robber_ && !finished)
        doc["predicted_bound"] = predicted_bound(*robber_, side == Side::Robber ? Convention::RobberFirst : Convention::CopFirst);
    else
        doc["predicted_bound"] = nullptr;
    doc["viewport"] = viewport ? json::array({viewport->x0, viewport->y0, viewport->x1, viewport->y1}) : json(nullptr);
    doc["legal_moves"] = legal;
    doc["moves_outside_viewport"] = total > legal.size();
    doc["last_machine_move"] = last_machine_move_ ? move_json(*last_machine_move_, last_machine_placement_)
                                                  : json(nullptr);
    doc["outcome"] = finished ? json(finished_by_cap_ ? "move_cap" : "captured") : json(nullptr);

    json moves = json::array();
    for (const MoveRecord& m : transcript_.moves) moves.push_back(move_json(m, false));
    doc["transcript"] = {{"convention", to_string(spec_.convention)},
                         {"cop_strategy", transcript_.cop_strategy},
                         {"robber_strategy", transcript_.robber_strategy},
                         {"starts", {{"cop", vertex_json(cop_ ? std::optional(transcript_.cop_start) : std::nullopt)},
                                     {"robber", vertex_json(robber_ ? std::optional(transcript_.robber_start) : std::nullopt)}}},
                         {"moves", moves},
                         {"outcome", doc["outcome"]},
                         {"cop_moves", cop_moves_}};
    return doc;
}

SessionManager::SessionManager(ServiceConfig config) : config_(config), ids_(std::random_device{}() ^ config.seed) {}

json SessionManager::create(const SessionSpec& spec) {
    std::string id;
    {
        std::unique_lock lock(mutex_);
        do {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(ids_.next()));
            id = buf;
        } while (sessions_.contains(id));
    }
    auto session = std::make_shared<Session>(id, spec, config_);
    json state = session->state(spec.graph == "quadrant" ? std::optional(kDefaultViewport) : std::nullopt);
    {
        std::unique_lock lock(mutex_);
        sessions_.emplace(id, session);
    }
    return {{"id", id}, {"state", state}};
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) const {
    std::shared_lock lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "not_found", "no session '" + id + "'");
    return it->second;
}

std::size_t SessionManager::size() const {
    std::shared_lock lock(mutex_);
    return sessions_.size();
}

std::optional<Box> parse_viewport(const std::optional<std::string>& x0, const std::optional<std::string>& y0,
                                  const std::optional<std::string>& x1, const std::optional<std::string>& y1) {
    const int given = x0.has_value() + y0.has_value() + x1.has_value() + y1.has_value();
    if (given == 0) return std::nullopt;
    if (given != 4) throw ServiceError(400, "bad_viewport", "give all of x0, y0, x1, y1 or none");
    auto number = [](const std::string& text) {
        Coord value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw ServiceError(400, "bad_viewport", "viewport bound '" + text + "' is not a natural number");
        return value;
    };
    return Box{number(*x0), number(*y0), number(*x1), number(*y1)};
}

}  // namespace cnr
