// Command-line front end: analyze DSL files or run the fixture corpus.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "hkit/fixtures.hpp"
#include "hkit/groebner.hpp"
#include "hkit/parallel.hpp"

#ifndef HKIT_FIXTURE_DIR
#define HKIT_FIXTURE_DIR "fixtures"
#endif

namespace {

std::set<std::string> parse_sections(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!hkit::known_sections().count(item)) throw CLI::ValidationError("--sections", "unknown section '" + item + "'");
    out.insert(item);
  }
  return out;
}

struct FileResult {
  hkit::Json report;
  std::string error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series, resolutions and deficiency modules of graded quotients"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int degree_cap = hkit::default_degree_cap();
  std::string sections = "hilbert,betti,deficiency,charp,identities";
  std::string format = "text";
  bool timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for generic linear forms");
    sub->add_option("--degree-cap", degree_cap, "abort Groebner computations above this degree")->check(CLI::PositiveNumber);
    sub->add_option("--sections", sections, "comma-separated: hilbert,betti,deficiency,charp,identities");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", timings, "include wall-clock timings (reports are then not reproducible)");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze input files");
  std::vector<std::string> files;
  analyze->add_option("files", files, "DSL input files ('-' for stdin)")->required();
  add_common(analyze);

  auto* fixtures = app.add_subcommand("fixtures", "run the fixture corpus");
  std::string dir = HKIT_FIXTURE_DIR;
  std::string filter;
  bool char_p = false;
  bool verbose = false;
  fixtures->add_option("--dir", dir, "fixture directory");
  fixtures->add_option("--filter", filter, "only fixtures whose name contains this string");
  fixtures->add_flag("--char-p", char_p, "only fixtures over GF(p) (Fedder and Ext-of-Ext checks)");
  fixtures->add_flag("-v,--verbose", verbose, "print every report");
  add_common(fixtures);

  CLI11_PARSE(app, argc, argv);

  hkit::set_default_degree_cap(degree_cap);
  hkit::AnalysisOptions opts;
  opts.seed = seed;
  opts.timings = timings;
  try {
    opts.sections = parse_sections(sections);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }

  if (*analyze) {
    auto results = hkit::parallel_map<FileResult>(files.size(), [&](std::size_t k) {
      FileResult r;
      try {
        std::string text;
        if (files[k] == "-") {
          std::ostringstream ss;
          ss << std::cin.rdbuf();
          text = ss.str();
        } else {
          text = hkit::read_file(files[k]);
        }
        r.report = hkit::analyze(hkit::parse_input(text), opts);
      } catch (const std::exception& e) {
        r.error = files[k] + ": " + e.what();
      }
      return r;
    });
    int status = 0;
    hkit::Json all = hkit::Json::array();
    for (const auto& r : results) {
      if (!r.error.empty()) {
        std::cerr << r.error << "\n";
        status = 1;
        continue;
      }
      if (!r.report["complete"].get<bool>()) status = 2;
      if (format == "json") {
        all.push_back(r.report);
      } else {
        std::cout << hkit::render_text(r.report) << "\n";
      }
    }
    if (format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return status;
  }

  auto summary = hkit::run_fixture_suite(dir, filter, char_p, opts);
  for (const auto& o : summary.outcomes) {
    std::cout << (o.passed ? "PASS " : "FAIL ") << o.name << "\n";
    for (const auto& f : o.failures) std::cout << "     " << f << "\n";
    if (verbose && !o.report.is_null())
      std::cout << (format == "json" ? o.report.dump(2) + "\n" : hkit::render_text(o.report));
  }
  std::cout << summary.passed() << "/" << summary.outcomes.size() << " fixtures passed\n";
  if (summary.outcomes.empty()) return 1;
  return summary.all_passed() ? 0 : 1;
}
