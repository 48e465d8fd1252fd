#include "cnr/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnr {

Vertex paper_cop_move(const GameState& s, const GraphOracle& graph) {
    const Vertex& r = s.robber;
    const Vertex& c = s.cop;
    if (graph.in_closed_neighborhood(c, r)) return r;

    bool mirror = false;
    if (r.y <= 1)
        mirror = false;
    else if (r.x <= 1)
        mirror = true;
    else
        mirror = s.robber_previous && r.y > s.robber_previous->y;

    const Vertex rr = mirror ? r.reflected() : r;
    const Vertex cc = mirror ? c.reflected() : c;
    Vertex target{checked_add(checked_add(rr.x, cc.x), 1), 0};
    if (mirror) target = target.reflected();
    if (!graph.contains(target))
        throw StrategyError("papercop: target " + to_string(target) + " is outside the graph (truncation too small)");
    return target;
}

Vertex paper_robber_move(const GameState& s, const GraphOracle& graph) {
    const Vertex& r = s.robber;
    const Vertex& c = s.cop;
    if (!graph.adjacent(r, c)) return r;

    // Canonical case: the cop is down-right of the robber.
    auto escape = [](const Vertex& robber, const Vertex& cop) -> std::optional<Vertex> {
        if (robber.x < cop.x && robber.y > cop.y) return Vertex{checked_add(cop.x, 1), robber.y - 1};
        return std::nullopt;
    };
    std::optional<Vertex> target = escape(r, c);
    if (!target) {
        target = escape(r.reflected(), c.reflected());
        if (target) target = target->reflected();
    }
    if (!target || !graph.contains(*target)) return r;
    return *target;
}

std::uint64_t predicted_bound(const Vertex& robber, Convention convention) {
    const Coord base = checked_add(std::max(robber.x, robber.y), 3);
    return convention == Convention::RobberFirst ? base : checked_add(base, 1);
}

Vertex RandomWalker::next_move(const GameState& s, const GraphOracle& g) {
    const Vertex& from = s.mover_position();
    if (g.is_finite()) {
        constexpr Coord kMax = std::numeric_limits<Coord>::max();
        const auto options = g.neighbors_within(from, Box{0, 0, kMax, kMax});
        const std::uint64_t pick = rng_.below(options.size() + 1);
        return pick == 0 ? from : options[pick - 1];
    }
    const auto* quadrant = dynamic_cast<const QuadrantGraph*>(&g);
    if (quadrant == nullptr) throw StrategyError("random: unsupported infinite graph");
    const Box window = Box::square(std::max({bound_, from.x, from.y}));
    const auto regions = quadrant->neighbor_regions(from, window);
    Coord total = 1;
    for (const Box& b : regions) total = checked_add(total, b.area());
    Coord pick = rng_.below(total);
    if (pick == 0) return from;
    --pick;
    for (const Box& b : regions) {
        const Coord area = b.area();
        if (pick < area) {
            const Coord width = b.x1 - b.x0 + 1;
            return {b.x0 + pick % width, b.y0 + pick / width};
        }
        pick -= area;
    }
    return from;
}

Vertex TableStrategy::next_move(const GameState& s, const GraphOracle&) {
    const auto robber = graph_->find(s.robber);
    const auto cop = graph_->find(s.cop);
    if (!robber || !cop) throw StrategyError("table: position not in the solved graph");
    const VertexId next = side_ == Side::Cop ? solved_->cop_move(*robber, *cop) : solved_->robber_move(*robber, *cop);
    return graph_->position(next);
}

namespace {

bool closed_adjacent(const Vertex& a, const Vertex& b) {
    if (a == b) return true;
    if (a.is_origin() || b.is_origin()) return false;
    if (a.x == 0 && b.x == 0) return true;
    if (a.y == 0 && b.y == 0) return true;
    return (a.x < b.x && a.y > b.y) || (a.x > b.x && a.y < b.y);
}

/// Coordinates in [0, bound] that realise every order type a new value can take
/// relative to `points` and 0, keeping up to `room` free slots on each side.
std::vector<Coord> representatives(std::initializer_list<Coord> points, Coord bound, int room) {
    std::vector<Coord> anchors{0, bound + 1};
    for (Coord p : points)
        if (p <= bound) anchors.push_back(p);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    std::vector<Coord> out;
    const auto r = static_cast<Coord>(room);
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const Coord lo = anchors[i];
        const Coord hi = anchors[i + 1];
        out.push_back(lo);
        const Coord gap = hi - lo - 1;
        if (gap <= 2 * r) {
            for (Coord v = lo + 1; v < hi; ++v) out.push_back(v);
        } else {
            for (Coord v = lo + 1; v <= lo + r; ++v) out.push_back(v);
            for (Coord v = hi - r; v < hi; ++v) out.push_back(v);
        }
    }
    return out;
}

/// Order type of (0, robber, cop, bound + 1) along one axis with gaps capped at `room`.
void append_layout(std::string& key, Coord robber, Coord cop, Coord bound, int room) {
    const Coord top = bound + 1;
    cop = std::min(cop, top);
    Coord values[4] = {0, robber, cop, top};
    std::sort(values, values + 4);
    const Coord* end = std::unique(values, values + 4);
    for (const Coord* v = values; v != end; ++v) {
        char role = 0;
        if (*v == 0) role |= 1;
        if (*v == robber) role |= 2;
        if (*v == cop) role |= 4;
        if (*v == top) role |= 8;
        key.push_back(role);
        if (v + 1 != end) key.push_back(static_cast<char>(std::min<Coord>(*(v + 1) - *v - 1, static_cast<Coord>(room))));
    }
    key.push_back('|');
}

}  // namespace

BoundedMinimaxRobber::BoundedMinimaxRobber(int horizon, Coord bound) : horizon_(horizon), bound_(bound) {
    if (horizon < 1) throw std::invalid_argument("minimax horizon must be at least 1");
    if (bound < 1 || bound > (Coord{1} << 62)) throw std::invalid_argument("minimax bound out of range");
}

int BoundedMinimaxRobber::robber_value(const Vertex& r, const Vertex& c, int h) {
    const int room = 2 * h - 1;
    std::string key{'R', static_cast<char>(h)};
    append_layout(key, r.x, c.x, bound_, room);
    append_layout(key, r.y, c.y, bound_, room);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int best = 0;
    const auto xs = representatives({r.x, c.x}, bound_, room);
    const auto ys = representatives({r.y, c.y}, bound_, room);
    for (Coord x : xs) {
        for (Coord y : ys) {
            const Vertex v{x, y};
            if (v.is_origin() || !closed_adjacent(r, v)) continue;
            int value = 0;
            if (!closed_adjacent(c, v)) value = h == 1 ? 1 : 1 + cop_value(v, c, h - 1);
            best = std::max(best, value);
            if (best == h) goto done;
        }
    }
done:
    memo_.emplace(std::move(key), static_cast<std::int8_t>(best));
    return best;
}

int BoundedMinimaxRobber::cop_value(const Vertex& r, const Vertex& c, int h) {
    const int room = 2 * h;
    std::string key{'C', static_cast<char>(h)};
    append_layout(key, r.x, c.x, bound_, room);
    append_layout(key, r.y, c.y, bound_, room);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int best = robber_value(r, c, h);  // the cop may stay put
    if (best > 0) {
        const auto xs = representatives({r.x, c.x}, bound_, room);
        const auto ys = representatives({r.y, c.y}, bound_, room);
        for (Coord x : xs) {
            for (Coord y : ys) {
                const Vertex v{x, y};
                if (v == c || v.is_origin() || !closed_adjacent(c, v)) continue;
                best = std::min(best, robber_value(r, v, h));
                if (best == 0) goto done;
            }
        }
    }
done:
    memo_.emplace(std::move(key), static_cast<std::int8_t>(best));
    return best;
}

int BoundedMinimaxRobber::evaluate(const Vertex& robber, const Vertex& cop, int horizon) {
    if (robber.x > bound_ || robber.y > bound_) throw StrategyError("minimax: robber outside the search bound");
    return robber_value(robber, cop, horizon);
}

Vertex BoundedMinimaxRobber::next_move(const GameState& s, const GraphOracle& g) {
    if (g.is_finite() || dynamic_cast<const QuadrantGraph*>(&g) == nullptr)
        throw StrategyError("minimax: only the quadrant graph is supported");
    const Vertex& r = s.robber;
    const Vertex& c = s.cop;
    if (r.x > bound_ || r.y > bound_) throw StrategyError("minimax: robber outside the search bound");

    const int room = 2 * horizon_ - 1;
    std::vector<Vertex> candidates;
    for (Coord x : representatives({r.x, c.x}, bound_, room))
        for (Coord y : representatives({r.y, c.y}, bound_, room))
            if (Vertex v{x, y}; !v.is_origin() && closed_adjacent(r, v)) candidates.push_back(v);
    std::stable_sort(candidates.begin(), candidates.end(), [](const Vertex& a, const Vertex& b) {
        return std::min(a.x, a.y) > std::min(b.x, b.y);
    });

    Vertex best = r;
    int best_value = -1;
    for (const Vertex& v : candidates) {
        int value = 0;
        if (!closed_adjacent(c, v)) value = horizon_ == 1 ? 1 : 1 + cop_value(v, c, horizon_ - 1);
        if (value > best_value) {
            best_value = value;
            best = v;
            if (value == horizon_) break;
        }
    }
    return best;
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, Side side, const StrategyOptions& options) {
    if (name == "papercop") {
        if (side != Side::Cop) throw std::invalid_argument("papercop plays the cop");
        return std::make_unique<PaperCop>();
    }
    if (name == "paperrobber") {
        if (side != Side::Robber) throw std::invalid_argument("paperrobber plays the robber");
        return std::make_unique<PaperRobber>();
    }
    if (name == "minimax") {
        if (side != Side::Robber) throw std::invalid_argument("minimax plays the robber");
        return std::make_unique<BoundedMinimaxRobber>(options.horizon, options.bound);
    }
    if (name == "stay") return std::make_unique<StayPut>();
    if (name == "random") return std::make_unique<RandomWalker>(options.seed, options.bound);
    if (name == "table") {
        if (!options.graph || !options.solved) throw std::invalid_argument("table strategy needs a solved finite graph");
        return std::make_unique<TableStrategy>(options.graph, options.solved, side);
    }
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

}  // namespace cnr
