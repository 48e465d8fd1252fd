#include "cnr/dismantle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cnr {

bool dominates(const FiniteGraph& g, VertexId y, VertexId x) {
    if (x == y || !g.adjacent_ids(x, y)) return false;
    for (VertexId z : g.neighbors(x))
        if (z != y && !g.adjacent_ids(y, z)) return false;
    return true;
}

std::optional<Domination> find_dominated_vertex(const FiniteGraph& g) {
    for (VertexId x = 0; x < g.size(); ++x)
        for (VertexId y : g.neighbors(x))
            if (dominates(g, y, x)) return Domination{x, y};
    return std::nullopt;
}

std::optional<Dismantling> dismantling_order(const FiniteGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    std::vector<char> alive(n, 1);
    auto dominated_now = [&](VertexId y, VertexId x) {
        for (VertexId z : g.neighbors(x))
            if (alive[z] && z != y && !g.adjacent_ids(y, z)) return false;
        return true;
    };
    Dismantling out;
    for (std::size_t left = n; left > 1; --left) {
        bool removed = false;
        for (VertexId x = 0; x < n && !removed; ++x) {
            if (!alive[x]) continue;
            for (VertexId y : g.neighbors(x)) {
                if (alive[y] && dominated_now(y, x)) {
                    alive[x] = 0;
                    out.removed.push_back(x);
                    out.dominators.push_back(y);
                    removed = true;
                    break;
                }
            }
        }
        if (!removed) return std::nullopt;
    }
    out.remaining = static_cast<VertexId>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
    return out;
}

ConstructionCheck verify_construction_order(const GraphOracle& oracle, std::span<const Vertex> order) {
    if (order.empty()) throw std::invalid_argument("construction order is empty");
    std::set<Vertex> seen;
    for (const Vertex& v : order) {
        if (!oracle.contains(v)) throw std::invalid_argument("vertex " + to_string(v) + " is not in the graph");
        if (!seen.insert(v).second) throw std::invalid_argument("vertex " + to_string(v) + " appears twice");
    }

    ConstructionCheck check;
    check.dominators.emplace_back();
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Vertex& v = order[i];
        std::vector<Vertex> prefix_neighbors;
        for (std::size_t j = 0; j < i; ++j)
            if (oracle.adjacent(v, order[j])) prefix_neighbors.push_back(order[j]);
        std::optional<Vertex> found;
        for (const Vertex& w : prefix_neighbors) {
            const bool covers = std::all_of(prefix_neighbors.begin(), prefix_neighbors.end(),
                                            [&](const Vertex& z) { return oracle.in_closed_neighborhood(w, z); });
            if (covers && (!found || w < *found)) found = w;
        }
        check.dominators.push_back(found);
        if (!found) {
            check.valid = false;
            check.failure_index = i;
            break;
        }
    }
    return check;
}

std::vector<Vertex> paper_construction_order(Coord k) {
    if (k < 1) throw std::invalid_argument("paper_construction_order needs k >= 1");
    std::vector<Vertex> order{{1, 0}, {0, 1}};
    for (Coord d = 2; d <= k; ++d)
        for (Coord a = 0; a <= d; ++a) order.push_back({a, d - a});
    return order;
}

}  // namespace cnr
