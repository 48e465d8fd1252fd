#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cnr/finite_graph.hpp"

namespace cnr {

struct Domination {
    VertexId dominated;
    VertexId dominator;
    friend bool operator==(const Domination&, const Domination&) = default;
};

/// True when N[x] is a subset of N[y] and x != y.
[[nodiscard]] bool dominates(const FiniteGraph& g, VertexId y, VertexId x);

/// Lexicographically first dominated vertex paired with its first dominator.
[[nodiscard]] std::optional<Domination> find_dominated_vertex(const FiniteGraph& g);

struct Dismantling {
    /// Removed vertices in removal order (reverse construction order), ids of the input graph.
    std::vector<VertexId> removed;
    /// dominators[i] dominated removed[i] at the time of its removal.
    std::vector<VertexId> dominators;
    VertexId remaining = 0;
};

/// Greedy elimination of dominated vertices. Present iff the graph reduces to one vertex.
[[nodiscard]] std::optional<Dismantling> dismantling_order(const FiniteGraph& g);

struct ConstructionCheck {
    bool valid = true;
    /// First index whose vertex is not dominated within its prefix.
    std::optional<std::size_t> failure_index;
    /// For each index >= 1 up to the failure, the lexicographically first dominator
    /// found in the prefix. Entry 0 is empty.
    std::vector<std::optional<Vertex>> dominators;
};

/// Checks that every vertex after the first is dominated inside the subgraph
/// induced by the vertices listed up to it. Throws std::invalid_argument for an
/// empty order, a repeated vertex, or a vertex outside the oracle.
[[nodiscard]] ConstructionCheck verify_construction_order(const GraphOracle& oracle, std::span<const Vertex> order);

/// (1,0), (0,1), then each anti-diagonal a + b = d for d = 2..k swept from (0,d) to (d,0).
[[nodiscard]] std::vector<Vertex> paper_construction_order(Coord k);

}  // namespace cnr
