#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "cnr/capture.hpp"
#include "cnr/game.hpp"
#include "cnr/rng.hpp"
#include "cnr/strategies.hpp"

namespace cnr {

/// Client-visible failure: HTTP status, stable code, readable message.
class ServiceError : public std::runtime_error {
public:
    ServiceError(int status, std::string code, const std::string& message)
        : std::runtime_error(message), status_(status), code_(std::move(code)) {}
    [[nodiscard]] int status() const { return status_; }
    [[nodiscard]] const std::string& code() const { return code_; }

private:
    int status_;
    std::string code_;
};

enum class SessionStatus { AwaitingHuman, AwaitingMachine, Finished };
[[nodiscard]] std::string_view to_string(SessionStatus s);

struct ServiceConfig {
    /// Largest coordinate a human may move to on the quadrant graph.
    Coord coordinate_cap = 1'000'000;
    /// Largest number of cells a state request may cover.
    Coord max_viewport_area = 250'000;
    /// Games stop with outcome move_cap after this many cop moves.
    std::uint64_t max_cop_moves = 10'000;
    /// Largest triangular truncation a session may use; tables are solved at creation.
    Coord max_truncation = 20;
    std::uint64_t seed = 1;
};

struct SessionSpec {
    /// "quadrant" for the infinite graph, or a builtin source such as "builtin:tri:6".
    std::string graph = "quadrant";
    Side human = Side::Robber;
    std::string strategy = "papercop";
    Convention convention = Convention::RobberFirst;
};

[[nodiscard]] SessionSpec session_spec_from_json(const nlohmann::json& body);

/// One game between a human and a machine strategy. All public members lock the
/// session, so concurrent requests on the same session are serialized.
class Session {
public:
    Session(std::string id, SessionSpec spec, const ServiceConfig& config);

    [[nodiscard]] const std::string& id() const { return id_; }
    /// The human's move, or his starting vertex while starts are being chosen.
    /// The machine's reply, if any, is applied before returning.
    nlohmann::json post_move(const Vertex& to, const std::optional<Box>& viewport);
    [[nodiscard]] nlohmann::json state(const std::optional<Box>& viewport) const;
    [[nodiscard]] nlohmann::json hint() const;
    [[nodiscard]] SessionStatus status() const;

private:
    [[nodiscard]] const GraphOracle& graph() const;
    [[nodiscard]] bool placed(Side side) const;
    [[nodiscard]] Side to_move() const;
    [[nodiscard]] GameState game_state() const;
    [[nodiscard]] Vertex machine_start() const;
    [[nodiscard]] Vertex suggested_start(Side side) const;
    void place(Side side, const Vertex& v);
    void apply(Side side, const Vertex& to);
    void machine_turns();
    void check_human_target(const Vertex& to) const;
    [[nodiscard]] nlohmann::json view(const std::optional<Box>& viewport) const;

    std::string id_;
    SessionSpec spec_;
    ServiceConfig config_;
    std::shared_ptr<const FiniteGraph> finite_;
    std::shared_ptr<const SolveResult> solved_;
    std::unique_ptr<Strategy> machine_;
    Transcript transcript_;
    std::optional<Vertex> cop_;
    std::optional<Vertex> robber_;
    std::optional<Vertex> robber_previous_;
    std::uint64_t cop_moves_ = 0;
    std::optional<MoveRecord> last_machine_move_;
    bool last_machine_placement_ = false;
    SessionStatus status_ = SessionStatus::AwaitingHuman;
    bool finished_by_cap_ = false;
    mutable std::mutex mutex_;
};

class SessionManager {
public:
    explicit SessionManager(ServiceConfig config = {});

    /// Returns {id, state}.
    nlohmann::json create(const SessionSpec& spec);
    [[nodiscard]] std::shared_ptr<Session> find(const std::string& id) const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const ServiceConfig& config() const { return config_; }

private:
    ServiceConfig config_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    SplitMix64 ids_;
};

/// Parses x0, y0, x1, y1 query values; all four or none.
[[nodiscard]] std::optional<Box> parse_viewport(const std::optional<std::string>& x0, const std::optional<std::string>& y0,
                                                const std::optional<std::string>& x1, const std::optional<std::string>& y1);

}  // namespace cnr
