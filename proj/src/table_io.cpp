#include "cnr/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cnr/graph_io.hpp"

namespace cnr {

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

std::string table_cache_json(const SolveResult& result) {
    nlohmann::json doc;
    doc["graph_hash"] = result.table.graph_hash();
    doc["eta"] = result.table.raw();
    doc["eta_G"] = result.eta_graph.raw();
    doc["rho_G"] = result.rho_graph.raw();
    doc["copwin"] = result.copwin;
    return doc.dump();
}

std::optional<SolveResult> load_table_cache(const std::filesystem::path& path, const FiniteGraph& g) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    const std::string hash = graph_hash(g);
    if (doc.value("graph_hash", std::string{}) != hash) return std::nullopt;
    const auto eta = doc.find("eta");
    const std::size_t n = g.size();
    if (eta == doc.end() || !eta->is_array() || eta->size() != n * n) return std::nullopt;

    CaptureTable table(n, hash);
    std::int32_t stages = 0;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!(*eta)[i].is_number_integer()) return std::nullopt;
        const auto raw = (*eta)[i].get<std::int32_t>();
        table.set(static_cast<VertexId>(i / n), static_cast<VertexId>(i % n), CaptureValue::from_raw(raw));
        stages = std::max(stages, raw);
    }
    table.set_stages(stages);
    SolveResult result = result_from_table(g, std::move(table));
    if (doc.value("eta_G", -2) != result.eta_graph.raw() || doc.value("rho_G", -2) != result.rho_graph.raw() ||
        doc.value("copwin", !result.copwin) != result.copwin)
        return std::nullopt;
    return result;
}

std::string eta_csv(const FiniteGraph& g, const CaptureTable& table) {
    std::ostringstream out;
    out << quoted("robber\\cop");
    for (VertexId v = 0; v < g.size(); ++v) out << ',' << quoted(g.label(v));
    out << '\n';
    for (VertexId u = 0; u < g.size(); ++u) {
        out << quoted(g.label(u));
        for (VertexId v = 0; v < g.size(); ++v) out << ',' << table.at(u, v).raw();
        out << '\n';
    }
    return out.str();
}

std::string summary_text(const FiniteGraph& g, const SolveResult& result) {
    std::ostringstream out;
    out << "vertices=" << g.size() << '\n';
    out << "edges=" << g.edge_count() << '\n';
    out << "eta_G=" << result.eta_graph.to_string() << '\n';
    out << "rho_G=" << result.rho_graph.to_string() << '\n';
    out << "copwin=" << (result.copwin ? "true" : "false") << '\n';
    if (const auto start = result.best_cop_start()) out << "best_cop_start=" << g.label(*start) << '\n';
    return out.str();
}

}  // namespace cnr
