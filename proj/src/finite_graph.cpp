#include "cnr/finite_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cnr/rng.hpp"

namespace cnr {

void FiniteGraph::build_adjacency(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
    adjacency_.assign(n, {});
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self loop on vertex " + std::to_string(a));
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw std::invalid_argument("duplicate edge");
    }
    edge_count_ = edges.size();
}

FiniteGraph FiniteGraph::from_edges(std::vector<std::string> names, std::span<const std::pair<VertexId, VertexId>> edges) {
    FiniteGraph g;
    g.build_adjacency(names.size(), edges);
    g.names_ = std::move(names);
    return g;
}

FiniteGraph FiniteGraph::from_coordinates(std::vector<Vertex> coords, std::span<const std::pair<VertexId, VertexId>> edges) {
    const std::size_t n = coords.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return coords[a] < coords[b]; });
    std::vector<VertexId> rank(n);
    for (VertexId i = 0; i < n; ++i) rank[order[i]] = i;

    FiniteGraph g;
    g.coords_.resize(n);
    for (VertexId i = 0; i < n; ++i) g.coords_[rank[i]] = coords[i];
    for (std::size_t i = 1; i < n; ++i)
        if (g.coords_[i] == g.coords_[i - 1]) throw std::invalid_argument("duplicate vertex " + to_string(g.coords_[i]));

    std::vector<std::pair<VertexId, VertexId>> remapped;
    remapped.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
        remapped.emplace_back(rank[a], rank[b]);
    }
    g.build_adjacency(n, remapped);
    return g;
}

bool FiniteGraph::adjacent_ids(VertexId a, VertexId b) const {
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<VertexId> FiniteGraph::closed_neighborhood(VertexId id) const {
    std::vector<VertexId> out(adjacency_[id].begin(), adjacency_[id].end());
    out.insert(std::lower_bound(out.begin(), out.end(), id), id);
    return out;
}

Vertex FiniteGraph::position(VertexId id) const {
    if (!coords_.empty()) return coords_[id];
    return {id, 0};
}

std::optional<VertexId> FiniteGraph::find(const Vertex& p) const {
    if (!coords_.empty()) {
        auto it = std::lower_bound(coords_.begin(), coords_.end(), p);
        if (it == coords_.end() || *it != p) return std::nullopt;
        return static_cast<VertexId>(it - coords_.begin());
    }
    if (p.y != 0 || p.x >= adjacency_.size()) return std::nullopt;
    return static_cast<VertexId>(p.x);
}

std::string FiniteGraph::label(VertexId id) const {
    if (!coords_.empty()) return to_string(coords_[id]);
    return names_[id];
}

std::vector<std::pair<VertexId, VertexId>> FiniteGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId a = 0; a < adjacency_.size(); ++a)
        for (VertexId b : adjacency_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

bool FiniteGraph::is_connected() const {
    if (adjacency_.empty()) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == adjacency_.size();
}

bool FiniteGraph::adjacent(const Vertex& u, const Vertex& v) const {
    const auto a = find(u);
    const auto b = find(v);
    return a && b && adjacent_ids(*a, *b);
}

std::vector<Vertex> FiniteGraph::neighbors_within(const Vertex& v, const Box& window) const {
    std::vector<Vertex> out;
    const auto id = find(v);
    if (!id) return out;
    for (VertexId w : adjacency_[*id]) {
        const Vertex p = position(w);
        if (window.contains(p)) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGraph induced_subgraph(const GraphOracle& oracle, std::span<const Vertex> vertices) {
    std::vector<Vertex> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (const Vertex& v : vs)
        if (!oracle.contains(v)) throw std::invalid_argument("vertex " + to_string(v) + " is not in the graph");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < vs.size(); ++i)
        for (VertexId j = i + 1; j < vs.size(); ++j)
            if (oracle.adjacent(vs[i], vs[j])) edges.emplace_back(i, j);
    return FiniteGraph::from_coordinates(std::move(vs), edges);
}

FiniteGraph triangular_truncation(Coord k) {
    std::vector<Vertex> vs;
    for (Coord a = 0; a <= k; ++a)
        for (Coord b = 0; a + b <= k; ++b)
            if (a != 0 || b != 0) vs.push_back({a, b});
    return induced_subgraph(quadrant_graph(), vs);
}

FiniteGraph square_truncation(Coord n) {
    std::vector<Vertex> vs;
    for (Coord a = 0; a <= n; ++a)
        for (Coord b = 0; b <= n; ++b)
            if (a != 0 || b != 0) vs.push_back({a, b});
    return induced_subgraph(quadrant_graph(), vs);
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

}  // namespace

FiniteGraph path_graph(std::size_t m) {
    if (m == 0) throw std::invalid_argument("path_graph needs at least one vertex");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return FiniteGraph::from_edges(default_names(m), edges);
}

FiniteGraph cycle_graph(std::size_t m) {
    if (m < 3) throw std::invalid_argument("cycle_graph needs at least three vertices");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, static_cast<VertexId>(m - 1));
    return FiniteGraph::from_edges(default_names(m), edges);
}

FiniteGraph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_connected_graph needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (std::size_t i = 1; i < n; ++i) {
        const auto parent = static_cast<std::size_t>(rng.below(i));
        present[parent][i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!present[i][j] && rng.unit() < p) present[i][j] = 1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (present[i][j]) edges.emplace_back(i, j);
    return FiniteGraph::from_edges(default_names(n), edges);
}

}  // namespace cnr
