#pragma once

#include <vector>

#include "cnr/vertex.hpp"

namespace cnr {

/// Adjacency contract shared by the infinite quadrant graph and explicit finite graphs.
///
/// `adjacent` is symmetric and irreflexive. Staying put is a game rule, not an edge;
/// callers that need the closed neighbourhood N[v] use `in_closed_neighborhood`.
class GraphOracle {
public:
    virtual ~GraphOracle() = default;

    [[nodiscard]] virtual bool contains(const Vertex& v) const = 0;
    [[nodiscard]] virtual bool adjacent(const Vertex& u, const Vertex& v) const = 0;
    /// Exactly {u in window : adjacent(u, v)}, in lexicographic order.
    [[nodiscard]] virtual std::vector<Vertex> neighbors_within(const Vertex& v, const Box& window) const = 0;
    /// True when every vertex has finitely many neighbours and the graph can be listed.
    [[nodiscard]] virtual bool is_finite() const = 0;

    [[nodiscard]] bool in_closed_neighborhood(const Vertex& center, const Vertex& w) const {
        return center == w || adjacent(center, w);
    }
};

/// The quadrant graph on N x N minus the origin. Two vertices are adjacent when both
/// lie on the same axis, or one lies strictly up-left of the other.
class QuadrantGraph final : public GraphOracle {
public:
    [[nodiscard]] bool contains(const Vertex& v) const override { return !v.is_origin(); }
    [[nodiscard]] bool adjacent(const Vertex& u, const Vertex& v) const override;
    [[nodiscard]] std::vector<Vertex> neighbors_within(const Vertex& v, const Box& window) const override;
    [[nodiscard]] bool is_finite() const override { return false; }

    /// Disjoint rectangles whose union is the open neighbourhood of `v` inside `window`.
    [[nodiscard]] std::vector<Box> neighbor_regions(const Vertex& v, const Box& window) const;
    /// |neighbors_within(v, window)| without enumerating (saturating).
    [[nodiscard]] Coord count_neighbors_within(const Vertex& v, const Box& window) const;
};

/// Throws std::invalid_argument for the origin; otherwise the quadrant adjacency rule.
[[nodiscard]] bool quadrant_adjacent(const Vertex& u, const Vertex& v);

/// Shared instance; the quadrant graph is stateless.
[[nodiscard]] const QuadrantGraph& quadrant_graph();

}  // namespace cnr
