#include "cnr/claims.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "cnr/capture.hpp"
#include "cnr/dismantle.hpp"
#include "cnr/graph_io.hpp"
#include "cnr/rng.hpp"
#include "cnr/strategies.hpp"

namespace cnr {

Level parse_level(std::string_view text) {
    if (text == "quick") return Level::Quick;
    if (text == "full") return Level::Full;
    throw std::invalid_argument("level must be quick or full");
}

std::string_view to_string(Level level) { return level == Level::Quick ? "quick" : "full"; }

namespace {

bool axis_form(const Vertex& r) {
    return (r.y <= 1 && r.x >= 1) || (r.x <= 1 && r.y >= 1);
}

template <class T>
std::string join(const std::vector<T>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ']';
    return out.str();
}

std::string str(const Vertex& v) { return to_string(v); }

std::vector<Box> closed_regions(const QuadrantGraph& q, const Vertex& v) {
    constexpr Coord kMax = std::numeric_limits<Coord>::max();
    std::vector<Box> out = q.neighbor_regions(v, Box{0, 0, kMax, kMax});
    out.push_back({v.x, v.y, v.x, v.y});
    return out;
}

// Whether N[a] and N[b] share a vertex.
bool closed_neighborhoods_meet(const GraphOracle& graph, const Vertex& a, const Vertex& b) {
    if (const auto* q = dynamic_cast<const QuadrantGraph*>(&graph)) {
        for (const Box& p : closed_regions(*q, a))
            for (const Box& r : closed_regions(*q, b))
                if (!p.intersect(r).empty()) return true;
        return false;
    }
    if (graph.in_closed_neighborhood(a, b)) return true;
    constexpr Coord kMax = std::numeric_limits<Coord>::max();
    for (const Vertex& w : graph.neighbors_within(a, Box{0, 0, kMax, kMax}))
        if (graph.in_closed_neighborhood(w, b)) return true;
    return false;
}

class Recorder {
public:
    explicit Recorder(ClaimReport& r) : report_(r) {}
    template <class T>
    void add(std::string name, const T& value) {
        std::ostringstream out;
        out << value;
        report_.measured.emplace_back(std::move(name), out.str());
    }
    void fail(const std::string& first_failure) {
        if (report_.pass) add("first_failure", first_failure);
        report_.pass = false;
    }

private:
    ClaimReport& report_;
};

// All labelled graphs on n vertices, as edge masks over the pairs (i < j).
std::vector<FiniteGraph> all_connected_graphs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<FiniteGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) edges.push_back(pairs[e]);
        FiniteGraph g = FiniteGraph::from_edges(names, edges);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

ClaimReport path_capture_time(Level, std::uint64_t) {
    ClaimReport report{"01-path-capture-time", "n=1..10 on P_{2n+1}", true, {}, 0};
    Recorder rec(report);
    std::vector<std::string> values;
    for (std::size_t n = 1; n <= 10; ++n) {
        const SolveResult r = solve_eta(path_graph(2 * n + 1));
        values.push_back(r.eta_graph.to_string());
        if (r.eta_graph != CaptureValue::finite(static_cast<std::int32_t>(n)))
            rec.fail("P_" + std::to_string(2 * n + 1) + " eta_G=" + r.eta_graph.to_string());
    }
    rec.add("eta_G", join(values));
    return report;
}

ClaimReport oracle_equivalence(Level, std::uint64_t seed) {
    ClaimReport report{"02-oracle-equivalence", "exhaustive connected n<=5, 200 random n<=8", true, {}, 0};
    Recorder rec(report);
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (const FiniteGraph& g : all_connected_graphs(n)) {
            ++exhaustive;
            if (solve_eta(g).table != solve_eta_naive(g)) rec.fail("exhaustive graph " + serialize_graph(g));
        }
    SplitMix64 rng(seed ^ 0x02);
    std::size_t max_n = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(8);
        max_n = std::max(max_n, n);
        const FiniteGraph g = random_connected_graph(n, rng.unit(), rng.next());
        if (solve_eta(g).table != solve_eta_naive(g)) rec.fail("random graph " + serialize_graph(g));
    }
    rec.add("exhaustive_graphs", exhaustive);
    rec.add("random_graphs", 200);
    rec.add("random_max_n", max_n);
    return report;
}

ClaimReport finite_characterization(Level level, std::uint64_t seed) {
    const std::size_t max_n = level == Level::Full ? 9 : 7;
    ClaimReport report{"03-finite-characterization", "500 random connected n<=" + std::to_string(max_n), true, {}, 0};
    Recorder rec(report);
    SplitMix64 rng(seed ^ 0x03);
    std::size_t copwin = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng.below(max_n);
        const FiniteGraph g = random_connected_graph(n, rng.unit(), rng.next());
        const bool solver = solve_eta(g).copwin;
        const bool dismantlable = dismantling_order(g).has_value();
        copwin += solver;
        if (solver != dismantlable) rec.fail("graph " + serialize_graph(g));
    }
    rec.add("graphs", 500);
    rec.add("copwin", copwin);
    rec.add("not_copwin", 500 - copwin);
    return report;
}

ClaimReport truncations_constructible(Level level, std::uint64_t) {
    const Coord max_k = level == Level::Full ? 30 : 12;
    ClaimReport report{"04-truncations-constructible", "k=1.." + std::to_string(max_k), true, {}, 0};
    Recorder rec(report);
    const std::vector<Vertex> first_five{{1, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}};
    for (Coord k = 1; k <= max_k; ++k) {
        const FiniteGraph t = triangular_truncation(k);
        const std::string tag = "k=" + std::to_string(k);
        if (!solve_eta(t).copwin) rec.fail(tag + " not copwin");
        if (!dismantling_order(t)) rec.fail(tag + " not dismantlable");
        const auto order = paper_construction_order(k);
        const ConstructionCheck check = verify_construction_order(quadrant_graph(), order);
        if (!check.valid) rec.fail(tag + " construction order fails at " + std::to_string(*check.failure_index));
        if (k >= 2 && !std::equal(first_five.begin(), first_five.end(), order.begin()))
            rec.fail(tag + " order does not start (1,0),(0,1),(0,2),(1,1),(2,0)");
    }
    const ConstructionCheck check = verify_construction_order(quadrant_graph(), paper_construction_order(2));
    std::vector<std::string> dominators;
    for (std::size_t i = 1; i < check.dominators.size(); ++i) dominators.push_back(str(*check.dominators[i]));
    rec.add("k2_dominators", join(dominators));
    return report;
}

ClaimReport capture_bound_solver(Level level, std::uint64_t) {
    const Coord max_k = level == Level::Full ? 20 : 12;
    ClaimReport report{"05-capture-bound-solver", "k=2.." + std::to_string(max_k) + ", interior sums<=k-2", true, {}, 0};
    Recorder rec(report);
    std::uint64_t interior = 0, boundary = 0, boundary_over = 0;
    std::int64_t worst_slack = -1000;
    for (Coord k = 2; k <= max_k; ++k) {
        const FiniteGraph t = triangular_truncation(k);
        const SolveResult r = solve_eta(t);
        for (VertexId u = 0; u < t.size(); ++u)
            for (VertexId v = 0; v < t.size(); ++v) {
                const Vertex a = t.position(u), c = t.position(v);
                const CaptureValue value = r.table.at(u, v);
                const std::uint64_t bound = predicted_bound(a, Convention::RobberFirst);
                const bool over = !value.is_finite() || static_cast<std::uint64_t>(value.moves()) > bound;
                if (a.x + a.y + 2 <= k && c.x + c.y + 2 <= k) {
                    ++interior;
                    if (value.is_finite())
                        worst_slack = std::max(worst_slack, static_cast<std::int64_t>(value.moves()) - static_cast<std::int64_t>(bound));
                    if (over) rec.fail("k=" + std::to_string(k) + " robber " + str(a) + " cop " + str(c));
                } else {
                    ++boundary;
                    boundary_over += over;
                }
            }
    }
    rec.add("interior_pairs", interior);
    rec.add("max_eta_minus_bound", worst_slack);
    rec.add("boundary_pairs", boundary);
    rec.add("boundary_exceedances", boundary_over);
    return report;
}

// One minimax robber per search bound so the memo carries over between games.
class MinimaxPool {
public:
    BoundedMinimaxRobber& get(Coord bound) {
        auto& slot = pool_[bound];
        if (!slot) slot = std::make_unique<BoundedMinimaxRobber>(3, bound);
        return *slot;
    }

private:
    std::map<Coord, std::unique_ptr<BoundedMinimaxRobber>> pool_;
};

std::string game_tag(const Transcript& t) {
    return t.robber_strategy + " " + std::string(to_string(t.convention)) + " cop " + str(t.cop_start) + " robber " +
           str(t.robber_start);
}

ClaimReport capture_bound_simulation(Level level, std::uint64_t seed) {
    const Coord limit = level == Level::Full ? 25 : 10;
    ClaimReport report{"06-capture-bound-simulation",
                       "paper cop vs 4 robbers, all starts <=" + std::to_string(limit) + ", both conventions",
                       true, {}, 0};
    Recorder rec(report);
    const auto& g = quadrant_graph();
    PaperCop cop;
    PaperRobber paper;
    StayPut stay;
    MinimaxPool minimax;
    std::map<std::string, std::uint64_t> games, worst;
    std::uint64_t forcing_checked = 0, strong_checked = 0, strong_holds = 0;
    std::vector<Vertex> starts;
    for (Coord x = 0; x <= limit; ++x)
        for (Coord y = 0; y <= limit; ++y)
            if (x || y) starts.push_back({x, y});

    for (const Convention convention : {Convention::CopFirst, Convention::RobberFirst})
        for (const Vertex& c : starts)
            for (const Vertex& r : starts) {
                const Coord m = 4 * std::max({c.x, c.y, r.x, r.y});
                RandomWalker random(seed ^ (c.x << 48) ^ (c.y << 32) ^ (r.x << 16) ^ r.y, m);
                for (Strategy* robber : std::initializer_list<Strategy*>{&paper, &stay, &random, &minimax.get(m)}) {
                    const Transcript t = run_game(g, cop, *robber, c, r, convention, default_move_cap(c, r));
                    const std::uint64_t bound = predicted_bound(r, convention);
                    ++games[robber->name()];
                    worst[robber->name()] = std::max(worst[robber->name()], t.cop_moves);
                    if (t.outcome != Outcome::Captured || t.cop_moves > bound)
                        rec.fail(game_tag(t) + " cop_moves=" + std::to_string(t.cop_moves) + " bound=" + std::to_string(bound));
                    if (std::string why = forcing_violation(g, t); !why.empty()) rec.fail(game_tag(t) + " forcing: " + why);
                    ++forcing_checked;
                    if (robber == &paper) {
                        const auto [checked, holds] = strong_evasion_counts(g, t);
                        strong_checked += checked;
                        strong_holds += holds;
                    }
                }
            }
    for (const auto& [name, count] : games) rec.add("games_" + name, count);
    for (const auto& [name, moves] : worst) rec.add("max_cop_moves_" + name, moves);
    rec.add("transcripts_forcing_checked", forcing_checked);
    rec.add("paper_escapes", strong_checked);
    rec.add("paper_escapes_strong_evasion", strong_holds);
    return report;
}

ClaimReport axis_capture(Level, std::uint64_t seed) {
    ClaimReport report{"07-axis-capture", "a=1..25, robber-first, cop starts <=25, 4 robbers", true, {}, 0};
    Recorder rec(report);
    const auto& g = quadrant_graph();
    PaperCop cop;
    PaperRobber paper;
    StayPut stay;
    MinimaxPool minimax;
    std::uint64_t games = 0, stay_worst = 0, direct = 0;
    for (Coord a = 1; a <= 25; ++a)
        for (const Vertex r : {Vertex{a, 0}, Vertex{a, 1}, Vertex{0, a}, Vertex{1, a}})
            for (Coord cx = 0; cx <= 25; ++cx)
                for (Coord cy = 0; cy <= 25; ++cy) {
                    const Vertex c{cx, cy};
                    if (c.is_origin() || c == r) continue;
                    const Coord m = 4 * std::max({c.x, c.y, r.x, r.y});
                    RandomWalker random(seed ^ (cx << 40) ^ (cy << 20) ^ a, m);
                    for (Strategy* robber : std::initializer_list<Strategy*>{&paper, &stay, &random, &minimax.get(m)}) {
                        const Transcript t = run_game(g, cop, *robber, c, r, Convention::RobberFirst, default_move_cap(c, r));
                        ++games;
                        if (std::string why = axis_violation(t); !why.empty()) rec.fail(game_tag(t) + ": " + why);
                        if (t.cop_moves <= 2) ++direct;
                        if (robber == &stay) {
                            stay_worst = std::max(stay_worst, t.cop_moves);
                            if (t.cop_moves > 2) rec.fail(game_tag(t) + " cop_moves=" + std::to_string(t.cop_moves));
                        }
                    }
                }
    rec.add("games", games);
    rec.add("games_within_2_from_start", direct);
    rec.add("max_cop_moves_stay", stay_worst);
    return report;
}

ClaimReport unboundedness(Level, std::uint64_t) {
    ClaimReport report{"08-unboundedness", "rho(tri_k) k=2,4..20; paper robber from (n+1,n+1), n<=20", true, {}, 0};
    Recorder rec(report);
    std::vector<std::string> rhos;
    std::map<Coord, CaptureValue> rho;
    for (Coord k = 2; k <= 20; k += 2) {
        rho[k] = solve_eta(triangular_truncation(k)).rho_graph;
        rhos.push_back(rho[k].to_string());
        if (k > 2 && rho[k] < rho[k - 2]) rec.fail("rho decreases at k=" + std::to_string(k));
    }
    rec.add("rho", join(rhos));
    if (!(rho[20] > rho[4])) rec.fail("rho(tri_20)=" + rho[20].to_string() + " not above rho(tri_4)=" + rho[4].to_string());

    const auto& g = quadrant_graph();
    PaperCop cop;
    PaperRobber robber;
    std::vector<std::uint64_t> shortest;
    for (Coord n = 1; n <= 20; ++n) {
        const Vertex r{n + 1, n + 1};
        std::uint64_t least = ~std::uint64_t{0};
        for (Coord cx = 0; cx <= n + 2; ++cx)
            for (Coord cy = 0; cy <= n + 2; ++cy) {
                const Vertex c{cx, cy};
                if (c.is_origin() || c == r) continue;
                const Transcript t = run_game(g, cop, robber, c, r, Convention::RobberFirst, default_move_cap(c, r));
                least = std::min(least, t.cop_moves);
                if (t.cop_moves < n) rec.fail("n=" + std::to_string(n) + " cop " + str(c) + " captured after " + std::to_string(t.cop_moves));
            }
        shortest.push_back(least);
    }
    rec.add("survival_min_cop_moves", join(shortest));
    return report;
}

ClaimReport policy_soundness(Level, std::uint64_t) {
    ClaimReport report{"09-policy-soundness", "k=1..10, every robber-first start", true, {}, 0};
    Recorder rec(report);
    std::uint64_t games = 0;
    for (Coord k = 1; k <= 10; ++k) {
        auto t = std::make_shared<const FiniteGraph>(triangular_truncation(k));
        auto solved = std::make_shared<const SolveResult>(solve_eta(*t));
        TableStrategy cop(t, solved, Side::Cop), robber(t, solved, Side::Robber);
        for (VertexId u = 0; u < t->size(); ++u)
            for (VertexId v = 0; v < t->size(); ++v) {
                const CaptureValue value = solved->table.at(u, v);
                const Transcript game = run_game(*t, cop, robber, t->position(v), t->position(u), Convention::RobberFirst,
                                                 static_cast<std::uint64_t>(value.moves()) + 2);
                ++games;
                if (game.outcome != Outcome::Captured || game.cop_moves != static_cast<std::uint64_t>(value.moves()))
                    rec.fail("k=" + std::to_string(k) + " robber " + str(t->position(u)) + " cop " + str(t->position(v)));
            }
    }
    rec.add("games", games);
    return report;
}

}  // namespace

std::string forcing_violation(const GraphOracle& graph, const Transcript& t) {
    GameState state = state_before(t, 0);
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        const MoveRecord& m = t.moves[i];
        if (m.by != Side::Cop || m.to == state.robber || i + 1 >= t.moves.size()) {
            state = state_before(t, i + 1);
            continue;
        }
        const Vertex r = state.robber;
        const Vertex next = t.moves[i + 1].to;
        const bool along_x = m.to.y == 0 && m.to.x > r.x && r.y >= 1;
        const bool along_y = m.to.x == 0 && m.to.y > r.y && r.x >= 1;
        if (along_x || along_y) {
            const bool lowered = along_x ? next.y < r.y : next.x < r.x;
            if (!lowered && !graph.in_closed_neighborhood(m.to, next))
                return "move " + std::to_string(i + 1) + " " + str(r) + " -> " + str(next) + " against cop " + str(m.to);
        }
        state = state_before(t, i + 1);
    }
    return {};
}

std::string axis_violation(const Transcript& t) {
    for (std::size_t i = 0; i <= t.moves.size(); ++i) {
        const GameState s = state_before(t, i);
        if (s.captured() || s.to_move != Side::Cop || !axis_form(s.robber)) continue;
        const std::uint64_t left = t.cop_moves - s.cop_moves;
        if (t.outcome != Outcome::Captured || left > 2)
            return "robber " + str(s.robber) + " cop " + str(s.cop) + " needed " + std::to_string(left) + " more cop moves";
    }
    return {};
}

std::pair<std::uint64_t, std::uint64_t> strong_evasion_counts(const GraphOracle& graph, const Transcript& t) {
    std::uint64_t checked = 0, holds = 0;
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        const MoveRecord& m = t.moves[i];
        if (m.by != Side::Robber || m.from == m.to) continue;
        const GameState s = state_before(t, i);
        if (!graph.adjacent(s.robber, s.cop)) continue;
        ++checked;
        holds += !closed_neighborhoods_meet(graph, s.cop, m.to);
    }
    return {checked, holds};
}

const std::vector<ClaimSpec>& claim_catalog() {
    static const std::vector<ClaimSpec> catalog{
        {"01-path-capture-time", "path P_{2n+1} has capture time n", path_capture_time},
        {"02-oracle-equivalence", "attractor solver equals the stage-by-stage relations", oracle_equivalence},
        {"03-finite-characterization", "cop-win exactly when dismantlable", finite_characterization},
        {"04-truncations-constructible", "triangular truncations are cop-win and constructible", truncations_constructible},
        {"05-capture-bound-solver", "eta((a,b), v) <= max(a,b)+3 away from the truncation boundary", capture_bound_solver},
        {"06-capture-bound-simulation", "paper cop captures within the predicted bound", capture_bound_simulation},
        {"07-axis-capture", "robber on an axis is captured within two cop moves", axis_capture},
        {"08-unboundedness", "maximum capture time grows with the truncation", unboundedness},
        {"09-policy-soundness", "optimal policies realise the table values", policy_soundness},
    };
    return catalog;
}

std::vector<ClaimReport> run_claims(Level level, std::uint64_t seed, const std::string& filter) {
    std::vector<ClaimReport> out;
    for (const ClaimSpec& spec : claim_catalog()) {
        if (!filter.empty() && spec.id.find(filter) == std::string::npos) continue;
        const auto begin = std::chrono::steady_clock::now();
        ClaimReport report;
        try {
            report = spec.run(level, seed);
        } catch (const std::exception& e) {
            report = ClaimReport{spec.id, "", false, {{"error", e.what()}}, 0};
        }
        report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
        out.push_back(std::move(report));
    }
    std::sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
    return out;
}

std::string report_line(const ClaimReport& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.params << "]";
    for (const auto& [name, value] : r.measured) out << ' ' << name << '=' << value;
    out << " (" << static_cast<long long>(r.runtime_ms) << " ms)";
    return out.str();
}

std::string reports_csv(const std::vector<ClaimReport>& reports) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + '"';
    };
    std::ostringstream out;
    out << "claim_id,pass,params,measured,runtime_ms\n";
    for (const ClaimReport& r : reports) {
        std::string measured;
        for (const auto& [name, value] : r.measured) measured += (measured.empty() ? "" : ";") + name + "=" + value;
        out << quote(r.id) << ',' << (r.pass ? "true" : "false") << ',' << quote(r.params) << ',' << quote(measured)
            << ',' << static_cast<long long>(r.runtime_ms) << '\n';
    }
    return out.str();
}

}  // namespace cnr
