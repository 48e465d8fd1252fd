#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnr/finite_graph.hpp"

namespace cnr {

/// Capture time in cop moves, or RobberWin when the robber escapes forever.
class CaptureValue {
public:
    constexpr CaptureValue() = default;
    [[nodiscard]] static constexpr CaptureValue finite(std::int32_t moves) { return CaptureValue(moves); }
    [[nodiscard]] static constexpr CaptureValue robber_win() { return CaptureValue(); }

    [[nodiscard]] constexpr bool is_finite() const { return raw_ >= 0; }
    [[nodiscard]] constexpr std::int32_t moves() const { return raw_; }
    /// -1 encodes RobberWin.
    [[nodiscard]] constexpr std::int32_t raw() const { return raw_; }
    [[nodiscard]] static constexpr CaptureValue from_raw(std::int32_t raw) { return raw < 0 ? robber_win() : finite(raw); }

    friend constexpr bool operator==(CaptureValue, CaptureValue) = default;
    /// RobberWin compares greater than every finite value.
    friend constexpr bool operator<(CaptureValue a, CaptureValue b) {
        if (!a.is_finite()) return false;
        if (!b.is_finite()) return true;
        return a.raw_ < b.raw_;
    }
    friend constexpr bool operator>(CaptureValue a, CaptureValue b) { return b < a; }
    friend constexpr bool operator<=(CaptureValue a, CaptureValue b) { return !(b < a); }
    friend constexpr bool operator>=(CaptureValue a, CaptureValue b) { return !(a < b); }

    [[nodiscard]] std::string to_string() const { return is_finite() ? std::to_string(raw_) : "RobberWin"; }

private:
    constexpr explicit CaptureValue(std::int32_t moves) : raw_(moves) {}
    std::int32_t raw_ = -1;
};

/// Robber-first capture values eta[u][v] for robber at u and cop at v.
class CaptureTable {
public:
    CaptureTable() = default;
    CaptureTable(std::size_t n, std::string graph_hash)
        : n_(n), graph_hash_(std::move(graph_hash)), raw_(n * n, -1) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const std::string& graph_hash() const { return graph_hash_; }
    [[nodiscard]] CaptureValue at(VertexId robber, VertexId cop) const { return CaptureValue::from_raw(raw_[index(robber, cop)]); }
    void set(VertexId robber, VertexId cop, CaptureValue v) { raw_[index(robber, cop)] = v.raw(); }

    /// Largest finite entry; equals the last stage at which a new pair settled.
    [[nodiscard]] std::int32_t stages() const { return stages_; }
    void set_stages(std::int32_t s) { stages_ = s; }

    /// Row-major by robber, -1 for RobberWin.
    [[nodiscard]] const std::vector<std::int32_t>& raw() const { return raw_; }

    friend bool operator==(const CaptureTable& a, const CaptureTable& b) { return a.n_ == b.n_ && a.raw_ == b.raw_; }

private:
    [[nodiscard]] std::size_t index(VertexId robber, VertexId cop) const { return static_cast<std::size_t>(robber) * n_ + cop; }

    std::size_t n_ = 0;
    std::string graph_hash_;
    std::vector<std::int32_t> raw_;
    std::int32_t stages_ = 0;
};

struct SolveResult {
    CaptureTable table;
    /// eta(v): worst robber start against a cop starting at v.
    std::vector<CaptureValue> per_cop_start;
    CaptureValue eta_graph;
    CaptureValue rho_graph;
    bool copwin = false;
    /// cop_policy[u * n + v]: the cop's reply from v with the robber at u, cop to move.
    std::vector<VertexId> cop_policy;
    /// robber_policy[u * n + v]: the robber's move from u with the cop at v, robber to move.
    std::vector<VertexId> robber_policy;

    [[nodiscard]] VertexId cop_move(VertexId robber, VertexId cop) const { return cop_policy[robber * table.size() + cop]; }
    [[nodiscard]] VertexId robber_move(VertexId robber, VertexId cop) const { return robber_policy[robber * table.size() + cop]; }
    /// Lexicographically first cop start attaining eta(G), if the graph is cop-win.
    [[nodiscard]] std::optional<VertexId> best_cop_start() const;
};

/// Retrograde (attractor) solve of the product game. Linear in the number of
/// product transitions. Requires at least one vertex.
[[nodiscard]] SolveResult solve_eta(const FiniteGraph& g);

/// Aggregates and tie-broken policies for a complete table of `g`.
[[nodiscard]] SolveResult result_from_table(const FiniteGraph& g, CaptureTable table);

/// Literal stage-by-stage evaluation of the <=_alpha relations. Quadratic in the
/// product size per stage; intended for small graphs as an independent check.
[[nodiscard]] CaptureTable solve_eta_naive(const FiniteGraph& g);

/// Value with the cop to move: 0 when u == v, otherwise 1 + min over y in N[v] of eta[u][y].
[[nodiscard]] CaptureValue cop_first_time(const FiniteGraph& g, const CaptureTable& t, VertexId robber, VertexId cop);

/// Aggregates eta(v), eta(G), rho(G) and copwin for a table.
void summarize(SolveResult& result);

}  // namespace cnr
