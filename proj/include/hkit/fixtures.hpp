#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hkit/report.hpp"

namespace hkit {

/// A fixture is NAME.hk (input) next to NAME.expected.json:
///   {"description": ..., "seed": 0, "checks": {"/json/pointer": value, ...}}
/// Every check compares one value of the analysis report exactly. An optional
/// "annotations" object (string values) is copied into the report unchecked.
struct FixtureOutcome {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
  Json report;
};

struct SuiteSummary {
  std::vector<FixtureOutcome> outcomes;
  std::size_t passed() const;
  bool all_passed() const { return passed() == outcomes.size(); }
};

/// Fixture stems under `dir` containing `filter` (all when empty), sorted.
std::vector<std::filesystem::path> list_fixtures(const std::filesystem::path& dir, const std::string& filter = "");

FixtureOutcome run_fixture(const std::filesystem::path& input_file, const AnalysisOptions& base = {});

/// With char_p_only, only fixtures over GF(p) run.
SuiteSummary run_fixture_suite(const std::filesystem::path& dir, const std::string& filter = "",
                               bool char_p_only = false, const AnalysisOptions& base = {});

std::string read_file(const std::filesystem::path& path);

}  // namespace hkit
