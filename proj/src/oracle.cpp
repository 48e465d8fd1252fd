#include "cnr/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnr {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

Box Box::intersect(const Box& o) const {
    return {std::max(x0, o.x0), std::max(y0, o.y0), std::min(x1, o.x1), std::min(y1, o.y1)};
}

Coord Box::area() const {
    if (empty()) return 0;
    constexpr Coord kMax = std::numeric_limits<Coord>::max();
    const Coord w = x1 - x0;
    const Coord h = y1 - y0;
    if (w == kMax || h == kMax) return kMax;
    const Coord wp = w + 1;
    const Coord hp = h + 1;
    if (wp > kMax / hp) return kMax;
    return wp * hp;
}

namespace {

bool quadrant_rule(const Vertex& u, const Vertex& v) {
    if (u == v) return false;
    if (u.x == 0 && v.x == 0) return true;
    if (u.y == 0 && v.y == 0) return true;
    return (u.x < v.x && u.y > v.y) || (u.x > v.x && u.y < v.y);
}

}  // namespace

bool quadrant_adjacent(const Vertex& u, const Vertex& v) {
    if (u.is_origin() || v.is_origin()) throw std::invalid_argument("the origin is not a vertex of the quadrant graph");
    return quadrant_rule(u, v);
}

bool QuadrantGraph::adjacent(const Vertex& u, const Vertex& v) const {
    if (u.is_origin() || v.is_origin()) return false;
    return quadrant_rule(u, v);
}

std::vector<Box> QuadrantGraph::neighbor_regions(const Vertex& v, const Box& window) const {
    std::vector<Box> out;
    if (v.is_origin() || window.empty()) return out;
    constexpr Coord kMax = std::numeric_limits<Coord>::max();
    auto push = [&](Box b) {
        b = b.intersect(window);
        if (!b.empty()) out.push_back(b);
    };
    // Regions are disjoint: axis rows/columns never overlap the strict quadrants below.
    // Up-left quadrant: x < v.x, y > v.y. Includes y-axis points when v.x > 0.
    if (v.x > 0 && v.y < kMax) push({0, v.y + 1, v.x - 1, kMax});
    // y-axis column (only when v is on it): (0, y), y >= 1, y != v.y. Points above v.y
    // are not in the up-left quadrant since v.x == 0.
    if (v.x == 0) {
        if (v.y > 1) push({0, 1, 0, v.y - 1});
        if (v.y < kMax) push({0, v.y + 1, 0, kMax});
    }
    // x-axis row (only when v is on it).
    if (v.y == 0) {
        if (v.x > 1) push({1, 0, v.x - 1, 0});
        if (v.x < kMax) push({v.x + 1, 0, kMax, 0});
    }
    // Down-right quadrant: x > v.x, y < v.y. Includes x-axis points when v.y > 0.
    if (v.y > 0 && v.x < kMax) push({v.x + 1, 0, kMax, v.y - 1});
    return out;
}

std::vector<Vertex> QuadrantGraph::neighbors_within(const Vertex& v, const Box& window) const {
    std::vector<Vertex> out;
    for (const Box& b : neighbor_regions(v, window)) {
        for (Coord x = b.x0;; ++x) {
            for (Coord y = b.y0;; ++y) {
                out.push_back({x, y});
                if (y == b.y1) break;
            }
            if (x == b.x1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Coord QuadrantGraph::count_neighbors_within(const Vertex& v, const Box& window) const {
    Coord total = 0;
    for (const Box& b : neighbor_regions(v, window)) {
        const Coord a = b.area();
        total = (a > std::numeric_limits<Coord>::max() - total) ? std::numeric_limits<Coord>::max() : total + a;
    }
    return total;
}

const QuadrantGraph& quadrant_graph() {
    static const QuadrantGraph g;
    return g;
}

}  // namespace cnr
