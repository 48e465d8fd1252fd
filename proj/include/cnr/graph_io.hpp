#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cnr/finite_graph.hpp"

namespace cnr {

/// Malformed graph document. `where()` is a byte offset for syntax errors or a
/// JSON path such as "edges[3]" for structural ones.
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    [[nodiscard]] const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Canonical text: {"version":1,"vertices":[[x,y],...] | ["name",...],"edges":[[i,j],...]}
/// with edges sorted, i < j.
[[nodiscard]] std::string serialize_graph(const FiniteGraph& g);
[[nodiscard]] FiniteGraph parse_graph(std::string_view text);

/// FNV-1a over the canonical serialization, as 16 lowercase hex digits.
[[nodiscard]] std::string graph_hash(const FiniteGraph& g);

/// Resolves "builtin:p5", "builtin:path:M", "builtin:cycle:M", "builtin:tri:K",
/// "builtin:sq:N" or a filesystem path to a graph document.
[[nodiscard]] FiniteGraph load_graph_source(const std::string& source);

}  // namespace cnr
