#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace cnr {

using Coord = std::uint64_t;

/// Thrown when a coordinate computation would leave the 64-bit range.
class CoordinateOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A lattice point (x, y). Ordered lexicographically (x first, then y).
struct Vertex {
    Coord x = 0;
    Coord y = 0;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

    [[nodiscard]] constexpr bool is_origin() const { return x == 0 && y == 0; }
    [[nodiscard]] constexpr Vertex reflected() const { return {y, x}; }
};

[[nodiscard]] std::string to_string(const Vertex& v);

[[nodiscard]] inline Coord checked_add(Coord a, Coord b) {
    if (a > std::numeric_limits<Coord>::max() - b)
        throw CoordinateOverflow("coordinate overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return a + b;
}

[[nodiscard]] inline Coord checked_mul(Coord a, Coord b) {
    if (a != 0 && b > std::numeric_limits<Coord>::max() / a)
        throw CoordinateOverflow("coordinate overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return a * b;
}

/// Inclusive coordinate rectangle [x0, x1] x [y0, y1]. Empty when x0 > x1 or y0 > y1.
struct Box {
    Coord x0 = 0;
    Coord y0 = 0;
    Coord x1 = 0;
    Coord y1 = 0;

    [[nodiscard]] static constexpr Box square(Coord side_max) { return {0, 0, side_max, side_max}; }

    [[nodiscard]] constexpr bool empty() const { return x0 > x1 || y0 > y1; }
    [[nodiscard]] constexpr bool contains(const Vertex& v) const {
        return !empty() && v.x >= x0 && v.x <= x1 && v.y >= y0 && v.y <= y1;
    }
    [[nodiscard]] Box intersect(const Box& o) const;
    /// Number of lattice points, saturating at the maximum of Coord.
    [[nodiscard]] Coord area() const;

    friend constexpr bool operator==(const Box&, const Box&) = default;
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        std::uint64_t h = v.x * 0x9E3779B97F4A7C15ULL;
        h ^= v.y + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace cnr
