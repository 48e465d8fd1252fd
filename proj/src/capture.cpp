#include "cnr/capture.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cnr/graph_io.hpp"

namespace cnr {

std::optional<VertexId> SolveResult::best_cop_start() const {
    if (!eta_graph.is_finite()) return std::nullopt;
    for (VertexId v = 0; v < per_cop_start.size(); ++v)
        if (per_cop_start[v] == eta_graph) return v;
    return std::nullopt;
}

void summarize(SolveResult& r) {
    const std::size_t n = r.table.size();
    r.per_cop_start.assign(n, CaptureValue::finite(0));
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u = 0; u < n; ++u) r.per_cop_start[v] = std::max(r.per_cop_start[v], r.table.at(u, v));
    r.eta_graph = CaptureValue::robber_win();
    r.rho_graph = CaptureValue::finite(0);
    for (const CaptureValue& value : r.per_cop_start) {
        r.eta_graph = std::min(r.eta_graph, value);
        r.rho_graph = std::max(r.rho_graph, value);
    }
    r.copwin = r.eta_graph.is_finite();
}

namespace {

std::vector<std::vector<VertexId>> closed_neighborhoods(const FiniteGraph& g) {
    std::vector<std::vector<VertexId>> out(g.size());
    for (VertexId v = 0; v < g.size(); ++v) out[v] = g.closed_neighborhood(v);
    return out;
}

}  // namespace

SolveResult solve_eta(const FiniteGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("solve_eta needs at least one vertex");
    const auto closed = closed_neighborhoods(g);
    const std::size_t pairs = n * n;

    // State s < pairs: robber to move at (s / n, s % n). State pairs + s: cop to move.
    std::vector<std::int32_t> value(2 * pairs, -1);
    std::vector<std::uint32_t> pending(pairs);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) pending[u * n + v] = static_cast<std::uint32_t>(closed[u].size());

    // 0-1 BFS: settling a robber-to-move state costs no cop move, settling a
    // cop-to-move state costs one. Values leave the deque in non-decreasing order,
    // so a cop state's first settled successor is its minimum and a robber
    // state's last settled successor is its maximum.
    std::deque<std::size_t> queue;
    for (VertexId v = 0; v < n; ++v) {
        value[v * n + v] = 0;
        value[pairs + v * n + v] = 0;
        queue.push_back(v * n + v);
        queue.push_back(pairs + v * n + v);
    }
    while (!queue.empty()) {
        const std::size_t s = queue.front();
        queue.pop_front();
        const std::int32_t val = value[s];
        if (s < pairs) {
            const VertexId robber = static_cast<VertexId>(s / n);
            const VertexId cop = static_cast<VertexId>(s % n);
            for (VertexId from : closed[cop]) {
                const std::size_t p = pairs + robber * n + from;
                if (value[p] < 0) {
                    value[p] = val + 1;
                    queue.push_back(p);
                }
            }
        } else {
            const VertexId robber = static_cast<VertexId>((s - pairs) / n);
            const VertexId cop = static_cast<VertexId>((s - pairs) % n);
            for (VertexId from : closed[robber]) {
                const std::size_t p = from * n + cop;
                if (value[p] >= 0) continue;
                if (--pending[p] == 0) {
                    value[p] = val;
                    queue.push_front(p);
                }
            }
        }
    }

    SolveResult result;
    result.table = CaptureTable(n, graph_hash(g));
    std::int32_t stages = 0;
    for (std::size_t s = 0; s < pairs; ++s) {
        result.table.set(static_cast<VertexId>(s / n), static_cast<VertexId>(s % n), CaptureValue::from_raw(value[s]));
        stages = std::max(stages, value[s]);
    }
    result.table.set_stages(stages);

    return result_from_table(g, std::move(result.table));
}

SolveResult result_from_table(const FiniteGraph& g, CaptureTable table) {
    const std::size_t n = g.size();
    if (table.size() != n) throw std::invalid_argument("table size does not match the graph");
    const auto closed = closed_neighborhoods(g);
    SolveResult result;
    result.table = std::move(table);
    std::vector<CaptureValue> cop_value(n * n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) cop_value[u * n + v] = cop_first_time(g, result.table, u, v);
    result.cop_policy.resize(n * n);
    result.robber_policy.resize(n * n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            VertexId best_cop = closed[v].front();
            for (VertexId y : closed[v])
                if (result.table.at(u, y) < result.table.at(u, best_cop)) best_cop = y;
            VertexId best_robber = closed[u].front();
            for (VertexId x : closed[u])
                if (cop_value[x * n + v] > cop_value[best_robber * n + v]) best_robber = x;
            if (u == v) best_cop = best_robber = v;
            result.cop_policy[u * n + v] = best_cop;
            result.robber_policy[u * n + v] = best_robber;
        }
    }
    summarize(result);
    return result;
}

CaptureTable solve_eta_naive(const FiniteGraph& g) {
    const std::size_t n = g.size();
    const auto closed = closed_neighborhoods(g);
    CaptureTable table(n, graph_hash(g));
    // related[u][v]: u <=_gamma v for some gamma strictly below the current stage.
    std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
    for (VertexId u = 0; u < n; ++u) {
        related[u][u] = 1;
        table.set(u, u, CaptureValue::finite(0));
    }
    std::int32_t stage = 0;
    for (;;) {
        ++stage;
        std::vector<std::pair<VertexId, VertexId>> entering;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (related[u][v]) continue;
                const bool all_answered = std::all_of(closed[u].begin(), closed[u].end(), [&](VertexId x) {
                    return std::any_of(closed[v].begin(), closed[v].end(), [&](VertexId y) { return related[x][y] != 0; });
                });
                if (all_answered) entering.emplace_back(u, v);
            }
        }
        if (entering.empty()) break;
        for (const auto& [u, v] : entering) {
            related[u][v] = 1;
            table.set(u, v, CaptureValue::finite(stage));
        }
        table.set_stages(stage);
    }
    return table;
}

CaptureValue cop_first_time(const FiniteGraph& g, const CaptureTable& t, VertexId robber, VertexId cop) {
    if (robber == cop) return CaptureValue::finite(0);
    CaptureValue best = CaptureValue::robber_win();
    for (VertexId y : g.closed_neighborhood(cop)) best = std::min(best, t.at(robber, y));
    if (!best.is_finite()) return best;
    return CaptureValue::finite(best.moves() + 1);
}

}  // namespace cnr
