#pragma once

#include <string>
#include <vector>

#include "cfroots/cf.hpp"
#include "cfroots/polynomial.hpp"

#include "json.hpp"

namespace cfroots {

/// {"degree", "bitsize", "roots": [...], "stats": {...}}; stats only when
/// include_stats. Rationals are "p/q" strings.
nlohmann::ordered_json to_json(const Polynomial& a, const IsolationResult& result,
                               bool include_stats);

/// Parses the "roots" array back into records.
std::vector<RootRecord> records_from_json(const nlohmann::json& roots);

/// One record per line: "(lo, hi)" or "= p/q".
std::string to_text(const std::vector<RootRecord>& records);

std::string stats_to_text(const RunStats& stats);

}  // namespace cfroots
