#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cnr/claims.hpp"
#include "cnr/dismantle.hpp"
#include "cnr/graph_io.hpp"
#include "cnr/strategies.hpp"

namespace py = pybind11;
using namespace cnr;

namespace {

using Point = std::pair<Coord, Coord>;

Vertex vertex(const Point& p) { return {p.first, p.second}; }
Point point(const Vertex& v) { return {v.x, v.y}; }

std::optional<std::int32_t> value(CaptureValue v) {
    if (!v.is_finite()) return std::nullopt;
    return v.moves();
}

py::dict solve_dict(const FiniteGraph& g, const SolveResult& r) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::int32_t>> table(n, std::vector<std::int32_t>(n));
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) table[u][v] = r.table.at(u, v).raw();
    std::vector<std::optional<std::int32_t>> per_cop;
    for (CaptureValue c : r.per_cop_start) per_cop.push_back(value(c));
    py::dict out;
    out["eta"] = table;
    out["eta_G"] = value(r.eta_graph);
    out["rho_G"] = value(r.rho_graph);
    out["copwin"] = r.copwin;
    out["per_cop_start"] = per_cop;
    out["best_cop_start"] = r.best_cop_start() ? py::cast(g.label(*r.best_cop_start())) : py::none();
    out["graph_hash"] = r.table.graph_hash();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cops and robbers engine: quadrant graph, exact solver, strategies and claim checks";

    py::register_exception<GraphParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<StrategyError>(m, "StrategyError", PyExc_RuntimeError);
    py::register_exception<IllegalMoveError>(m, "IllegalMoveError", PyExc_RuntimeError);
    py::register_exception<CoordinateOverflow>(m, "CoordinateOverflow", PyExc_OverflowError);

    py::class_<FiniteGraph>(m, "Graph")
        .def_property_readonly("size", &FiniteGraph::size)
        .def_property_readonly("edge_count", &FiniteGraph::edge_count)
        .def_property_readonly("labels", [](const FiniteGraph& g) {
            std::vector<std::string> out;
            for (VertexId i = 0; i < g.size(); ++i) out.push_back(g.label(i));
            return out;
        })
        .def_property_readonly("positions", [](const FiniteGraph& g) {
            std::vector<Point> out;
            for (VertexId i = 0; i < g.size(); ++i) out.push_back(point(g.position(i)));
            return out;
        })
        .def("edges", &FiniteGraph::edges)
        .def("neighbors", [](const FiniteGraph& g, VertexId id) {
            if (id >= g.size()) throw py::index_error("vertex id out of range");
            const auto n = g.neighbors(id);
            return std::vector<VertexId>(n.begin(), n.end());
        })
        .def("is_connected", &FiniteGraph::is_connected)
        .def("__len__", &FiniteGraph::size)
        .def("__eq__", [](const FiniteGraph& a, const FiniteGraph& b) { return a == b; });

    m.def("quadrant_adjacent", [](const Point& u, const Point& v) { return quadrant_adjacent(vertex(u), vertex(v)); });
    m.def("neighbors_within", [](const Point& v, const std::tuple<Coord, Coord, Coord, Coord>& box) {
        const auto [x0, y0, x1, y1] = box;
        std::vector<Point> out;
        for (const Vertex& u : quadrant_graph().neighbors_within(vertex(v), Box{x0, y0, x1, y1})) out.push_back(point(u));
        return out;
    }, py::arg("v"), py::arg("window"));

    m.def("triangular_truncation", &triangular_truncation, py::arg("k"));
    m.def("square_truncation", &square_truncation, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("m"));
    m.def("cycle_graph", &cycle_graph, py::arg("m"));
    m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("induced_subgraph", [](const std::vector<Point>& points) {
        std::vector<Vertex> vs;
        for (const Point& p : points) vs.push_back(vertex(p));
        return induced_subgraph(quadrant_graph(), vs);
    });
    m.def("serialize_graph", &serialize_graph);
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("load_graph_source", &load_graph_source);
    m.def("graph_hash", &graph_hash);

    m.def("solve_eta", [](const FiniteGraph& g) { return solve_dict(g, solve_eta(g)); });
    m.def("solve_eta_naive", [](const FiniteGraph& g) {
        const CaptureTable t = solve_eta_naive(g);
        std::vector<std::vector<std::int32_t>> out(g.size(), std::vector<std::int32_t>(g.size()));
        for (VertexId u = 0; u < g.size(); ++u)
            for (VertexId v = 0; v < g.size(); ++v) out[u][v] = t.at(u, v).raw();
        return out;
    });
    m.def("dismantling_order", [](const FiniteGraph& g) -> std::optional<std::vector<VertexId>> {
        auto d = dismantling_order(g);
        if (!d) return std::nullopt;
        auto order = d->removed;
        order.push_back(d->remaining);
        return order;
    });
    m.def("paper_construction_order", [](Coord k) {
        std::vector<Point> out;
        for (const Vertex& v : paper_construction_order(k)) out.push_back(point(v));
        return out;
    });
    m.def("verify_construction_order", [](const std::vector<Point>& order) {
        std::vector<Vertex> vs;
        for (const Point& p : order) vs.push_back(vertex(p));
        const ConstructionCheck c = verify_construction_order(quadrant_graph(), vs);
        return std::make_pair(c.valid, c.failure_index);
    });

    m.def("paper_cop_move", [](const Point& robber, const Point& cop, std::optional<Point> robber_previous) {
        GameState s;
        s.robber = vertex(robber);
        s.cop = vertex(cop);
        s.to_move = Side::Cop;
        if (robber_previous) s.robber_previous = vertex(*robber_previous);
        return point(paper_cop_move(s, quadrant_graph()));
    }, py::arg("robber"), py::arg("cop"), py::arg("robber_previous") = py::none());
    m.def("paper_robber_move", [](const Point& robber, const Point& cop) {
        GameState s;
        s.robber = vertex(robber);
        s.cop = vertex(cop);
        s.to_move = Side::Robber;
        return point(paper_robber_move(s, quadrant_graph()));
    }, py::arg("robber"), py::arg("cop"));
    m.def("predicted_bound", [](const Point& robber, const std::string& convention) {
        return predicted_bound(vertex(robber), parse_convention(convention));
    }, py::arg("robber"), py::arg("convention") = "robberfirst");

    m.def("play_json", [](const std::string& cop, const std::string& robber, const Point& cop_start, const Point& robber_start,
                          const std::string& convention, std::optional<std::uint64_t> move_cap, std::uint64_t seed,
                          std::optional<std::string> graph) {
        StrategyOptions options;
        options.seed = seed;
        const Vertex c = vertex(cop_start), r = vertex(robber_start);
        options.bound = 4 * std::max({c.x, c.y, r.x, r.y});
        const GraphOracle* oracle = &quadrant_graph();
        if (graph) {
            options.graph = std::make_shared<const FiniteGraph>(load_graph_source(*graph));
            options.solved = std::make_shared<const SolveResult>(solve_eta(*options.graph));
            oracle = options.graph.get();
        }
        auto cop_strategy = make_strategy(cop, Side::Cop, options);
        auto robber_strategy = make_strategy(robber, Side::Robber, options);
        py::gil_scoped_release release;
        const Transcript t = run_game(*oracle, *cop_strategy, *robber_strategy, c, r, parse_convention(convention),
                                      move_cap.value_or(default_move_cap(c, r)));
        return transcript_to_json(t);
    }, py::arg("cop"), py::arg("robber"), py::arg("cop_start"), py::arg("robber_start"), py::arg("convention") = "robberfirst",
       py::arg("move_cap") = py::none(), py::arg("seed") = 1, py::arg("graph") = py::none());

    m.def("run_claims", [](const std::string& level, std::uint64_t seed, const std::string& filter) {
        std::vector<ClaimReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_claims(parse_level(level), seed, filter);
        }
        py::list out;
        for (const ClaimReport& r : reports) {
            py::dict d;
            d["id"] = r.id;
            d["params"] = r.params;
            d["pass"] = r.pass;
            py::dict measured;
            for (const auto& [k, v] : r.measured) measured[py::str(k)] = v;
            d["measured"] = measured;
            d["runtime_ms"] = r.runtime_ms;
            out.append(d);
        }
        return out;
    }, py::arg("level") = "quick", py::arg("seed") = 20240601, py::arg("filter") = "");
}
