#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnr/oracle.hpp"

namespace cnr {

using VertexId = std::uint32_t;

/// Explicit simple undirected graph with dense ids and sorted adjacency lists.
///
/// A graph is either coordinate-labelled (ids follow lexicographic order of the
/// coordinates) or abstract with string names. Abstract vertex `i` occupies the
/// game position (i, 0) so strategies and the game runner can treat every graph
/// through the `GraphOracle` interface.
class FiniteGraph final : public GraphOracle {
public:
    FiniteGraph() = default;

    /// Abstract graph. Throws std::invalid_argument on out-of-range ids, self loops
    /// or duplicate edges.
    static FiniteGraph from_edges(std::vector<std::string> names, std::span<const std::pair<VertexId, VertexId>> edges);
    /// Coordinate graph; vertices are re-sorted lexicographically and edges remapped.
    static FiniteGraph from_coordinates(std::vector<Vertex> coords, std::span<const std::pair<VertexId, VertexId>> edges);

    [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
    [[nodiscard]] bool has_coordinates() const { return !coords_.empty() || adjacency_.empty(); }

    [[nodiscard]] std::span<const VertexId> neighbors(VertexId id) const { return adjacency_[id]; }
    [[nodiscard]] bool adjacent_ids(VertexId a, VertexId b) const;
    /// N[id] = neighbours plus id itself, sorted.
    [[nodiscard]] std::vector<VertexId> closed_neighborhood(VertexId id) const;

    [[nodiscard]] Vertex position(VertexId id) const;
    [[nodiscard]] std::optional<VertexId> find(const Vertex& position) const;
    [[nodiscard]] std::string label(VertexId id) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// Edges (i, j) with i < j in lexicographic order.
    [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> edges() const;
    [[nodiscard]] bool is_connected() const;

    // GraphOracle
    [[nodiscard]] bool contains(const Vertex& v) const override { return find(v).has_value(); }
    [[nodiscard]] bool adjacent(const Vertex& u, const Vertex& v) const override;
    [[nodiscard]] std::vector<Vertex> neighbors_within(const Vertex& v, const Box& window) const override;
    [[nodiscard]] bool is_finite() const override { return true; }

    friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
        return a.adjacency_ == b.adjacency_ && a.coords_ == b.coords_ && a.names_ == b.names_;
    }

private:
    void build_adjacency(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Vertex> coords_;
    std::vector<std::string> names_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph of `oracle` on `vertices` (deduplicated, sorted). Throws
/// std::invalid_argument when a vertex is not contained in the oracle.
[[nodiscard]] FiniteGraph induced_subgraph(const GraphOracle& oracle, std::span<const Vertex> vertices);

/// Quadrant graph restricted to {(a, b) : a + b <= k}, origin excluded.
[[nodiscard]] FiniteGraph triangular_truncation(Coord k);
/// Quadrant graph restricted to {0..n} x {0..n}, origin excluded. May be disconnected.
[[nodiscard]] FiniteGraph square_truncation(Coord n);

[[nodiscard]] FiniteGraph path_graph(std::size_t m);
[[nodiscard]] FiniteGraph cycle_graph(std::size_t m);

/// Connected graph on n vertices: a uniformly random recursive spanning tree
/// (vertex i attaches to a uniform earlier vertex) plus every remaining pair
/// independently with probability p. Deterministic for a fixed (n, p, seed).
[[nodiscard]] FiniteGraph random_connected_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace cnr
