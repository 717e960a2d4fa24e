#include "hkit/fixtures.hpp"

#include "hkit/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hkit {

std::size_t SuiteSummary::passed() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; }));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> list_fixtures(const std::filesystem::path& dir, const std::string& filter) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".hk") continue;
    if (!filter.empty() && e.path().stem().string().find(filter) == std::string::npos) continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

FixtureOutcome run_fixture(const std::filesystem::path& input_file, const AnalysisOptions& base) {
  FixtureOutcome o;
  o.name = input_file.stem().string();
  try {
    std::filesystem::path expected_file = input_file;
    expected_file.replace_extension(".expected.json");
    Json expected = Json::parse(read_file(expected_file));
    AnalysisOptions opts = base;
    if (expected.contains("seed")) opts.seed = expected["seed"].get<std::uint64_t>();
    ParsedInput in = parse_input(read_file(input_file));
    o.report = analyze(in, opts);
    if (expected.contains("annotations")) o.report["annotations"] = expected["annotations"];
    for (const auto& [ptr, want] : expected["checks"].items()) {
      Json::json_pointer p(ptr);
      if (!o.report.contains(p)) {
        o.failures.push_back(ptr + ": missing from report");
        continue;
      }
      const Json& got = o.report.at(p);
      if (got != want) o.failures.push_back(ptr + ": expected " + want.dump() + ", got " + got.dump());
    }
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("error: ") + e.what());
  }
  o.passed = o.failures.empty();
  return o;
}

SuiteSummary run_fixture_suite(const std::filesystem::path& dir, const std::string& filter, bool char_p_only,
                               const AnalysisOptions& base) {
  std::vector<std::filesystem::path> files;
  for (auto& f : list_fixtures(dir, filter)) {
    if (char_p_only && read_file(f).find("GF(") == std::string::npos) continue;
    files.push_back(f);
  }
  SuiteSummary s;
  s.outcomes = parallel_map<FixtureOutcome>(files.size(), [&](std::size_t k) { return run_fixture(files[k], base); });
  return s;
}

}  // namespace hkit
