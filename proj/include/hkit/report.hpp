#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "hkit/dsl.hpp"

namespace hkit {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct AnalysisOptions {
  std::uint64_t seed = 0;
  /// Subset of {hilbert, betti, deficiency, charp, identities}.
  std::set<std::string> sections{"hilbert", "betti", "deficiency", "charp", "identities"};
  bool timings = false;
  /// Highest l for the per-degree h_l / s_l checks.
  int degree_check_limit = 6;
};

const std::set<std::string>& known_sections();

/// Runs every enabled section. A section that throws (degree cap, size
/// limits) is reported as {"error": ...} and marks the report incomplete.
Json analyze(const ParsedInput& input, const AnalysisOptions& options = {});

/// Aligned human-readable rendering of an analysis report.
std::string render_text(const Json& report);

}  // namespace hkit
