#include "cnr/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cnr {

using nlohmann::json;

std::string serialize_graph(const FiniteGraph& g) {
    json doc;
    doc["version"] = 1;
    json vertices = json::array();
    for (VertexId i = 0; i < g.size(); ++i) {
        if (g.has_coordinates())
            vertices.push_back({g.position(i).x, g.position(i).y});
        else
            vertices.push_back(g.names()[i]);
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

namespace {

std::uint64_t as_natural(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw GraphParseError(where, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

FiniteGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw GraphParseError("$", "expected an object");
    if (!doc.contains("version") || doc["version"] != 1) throw GraphParseError("version", "expected version 1");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw GraphParseError("vertices", "expected an array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw GraphParseError("edges", "expected an array");

    const json& vs = doc["vertices"];
    if (vs.empty()) throw GraphParseError("vertices", "empty vertex list");
    const bool coordinate_form = vs[0].is_array();
    std::vector<Vertex> coords;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (coordinate_form) {
            if (!vs[i].is_array() || vs[i].size() != 2) throw GraphParseError(where, "expected [x, y]");
            coords.push_back({as_natural(vs[i][0], where + "[0]"), as_natural(vs[i][1], where + "[1]")});
        } else {
            if (!vs[i].is_string()) throw GraphParseError(where, "expected a vertex name");
            names.push_back(vs[i].get<std::string>());
        }
    }
    if (coordinate_form) {
        std::set<Vertex> seen;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!seen.insert(coords[i]).second)
                throw GraphParseError("vertices[" + std::to_string(i) + "]", "duplicate vertex");
    } else {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (!seen.insert(names[i]).second)
                throw GraphParseError("vertices[" + std::to_string(i) + "]", "duplicate vertex name");
    }

    const json& es = doc["edges"];
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen_edges;
    for (std::size_t k = 0; k < es.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        if (!es[k].is_array() || es[k].size() != 2) throw GraphParseError(where, "expected [i, j]");
        const auto i = as_natural(es[k][0], where + "[0]");
        const auto j = as_natural(es[k][1], where + "[1]");
        if (i >= j) throw GraphParseError(where, "expected i < j");
        if (j >= vs.size()) throw GraphParseError(where, "vertex index out of range");
        if (!seen_edges.insert({i, j}).second) throw GraphParseError(where, "duplicate edge");
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
    if (coordinate_form) return FiniteGraph::from_coordinates(std::move(coords), edges);
    return FiniteGraph::from_edges(std::move(names), edges);
}

std::string graph_hash(const FiniteGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::uint64_t parse_count(std::string_view s, const std::string& source) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad size in graph source '" + source + "'");
    return value;
}

}  // namespace

FiniteGraph load_graph_source(const std::string& source) {
    constexpr std::string_view kBuiltin = "builtin:";
    if (source.starts_with(kBuiltin)) {
        const std::string_view rest = std::string_view(source).substr(kBuiltin.size());
        if (rest == "p5") return path_graph(5);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("unknown builtin graph '" + source + "'");
        const std::string_view kind = rest.substr(0, colon);
        const std::uint64_t size = parse_count(rest.substr(colon + 1), source);
        if (kind == "path") return path_graph(size);
        if (kind == "cycle") return cycle_graph(size);
        if (kind == "tri") {
            if (size < 1) throw std::invalid_argument("builtin:tri needs K >= 1");
            return triangular_truncation(size);
        }
        if (kind == "sq") {
            if (size < 1) throw std::invalid_argument("builtin:sq needs N >= 1");
            return square_truncation(size);
        }
        throw std::invalid_argument("unknown builtin graph '" + source + "'");
    }
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open graph file '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace cnr
