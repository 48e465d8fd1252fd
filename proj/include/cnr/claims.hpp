#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cnr/game.hpp"

namespace cnr {

enum class Level { Quick, Full };

[[nodiscard]] Level parse_level(std::string_view text);
[[nodiscard]] std::string_view to_string(Level level);

struct ClaimReport {
    std::string id;
    std::string params;
    bool pass = false;
    /// Ordered (name, value) pairs.
    std::vector<std::pair<std::string, std::string>> measured;
    double runtime_ms = 0;
};

struct ClaimSpec {
    std::string id;
    std::string title;
    std::function<ClaimReport(Level, std::uint64_t)> run;
};

/// Every acceptance claim, sorted by id.
[[nodiscard]] const std::vector<ClaimSpec>& claim_catalog();

/// Runs the claims whose id contains `filter` (all when empty), sorted by id.
[[nodiscard]] std::vector<ClaimReport> run_claims(Level level, std::uint64_t seed, const std::string& filter = {});

/// "PASS <id> <params> key=value ... (<ms> ms)"
[[nodiscard]] std::string report_line(const ClaimReport& report);
[[nodiscard]] std::string reports_csv(const std::vector<ClaimReport>& reports);

/// After a non-capturing cop move to (X, 0) with X beyond the robber's x and the
/// robber off the x-axis, the robber's next move must land in N[cop] or lower his
/// y-coordinate; likewise through x = y. Returns a diagnostic or an empty string.
[[nodiscard]] std::string forcing_violation(const GraphOracle& graph, const Transcript& t);

/// Whenever the cop is to move with the robber on (a, 0), (a, 1), (0, a) or (1, a),
/// the game must end in capture within two further cop moves.
[[nodiscard]] std::string axis_violation(const Transcript& t);

/// Robber moves in `t` made while adjacent to the cop, and how many of them reach a
/// vertex adjacent to no vertex of N[cop]: (escapes checked, escapes with N[new] and N[cop] disjoint).
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> strong_evasion_counts(const GraphOracle& graph, const Transcript& t);

}  // namespace cnr
