#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cnr/capture.hpp"

namespace cnr {

/// Cache document: {graph_hash, eta (row-major, -1 = RobberWin), eta_G, rho_G, copwin}.
[[nodiscard]] std::string table_cache_json(const SolveResult& result);

/// Loads a cached table for `g`. Returns nullopt when the file is missing, malformed,
/// or was written for a different graph. Policies are rebuilt from the table.
[[nodiscard]] std::optional<SolveResult> load_table_cache(const std::filesystem::path& path, const FiniteGraph& g);

/// Square CSV of eta with quoted vertex labels: header row of cop labels, one row per robber.
[[nodiscard]] std::string eta_csv(const FiniteGraph& g, const CaptureTable& table);

/// One line per aggregate: eta_G, rho_G, copwin, vertices, edges.
[[nodiscard]] std::string summary_text(const FiniteGraph& g, const SolveResult& result);

}  // namespace cnr
