#pragma once

#include <string>

#include "voi/match.hpp"
#include "voi/regret_harness.hpp"

namespace voi {

/// Regret vs. budget, one polyline per policy, log2 x axis.
std::string render_svg(const ResultTable& table);

/// Engine A win rate vs. samples per ply with a dashed 0.5 reference line.
std::string render_svg(const MatchReport& report);

/// Writes the rendered chart to `path`. An empty table is rejected with
/// UsageError before anything is written.
void emit_plot(const ResultTable& table, const std::string& path);
void emit_plot(const MatchReport& report, const std::string& path);

}  // namespace voi
