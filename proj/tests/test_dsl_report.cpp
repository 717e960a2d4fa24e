#include <doctest.h>

#include <hkit/fixtures.hpp>
#include <hkit/report.hpp>

#include <filesystem>
#include <fstream>

using namespace hkit;

TEST_CASE("parse and print round-trip") {
  const char* inputs[] = {
      "ring QQ[x,y,z];\nideal I = x^2 - 3/2*y*z, x*y;\n",
      "ring GF(7)[a,b] lex;\nideal J = a^3 + 6*b^3;\n",
      "ring QQ[x1,x2,x3,x4];\ncomplex D = {1 2 3}, {2 3 4};\n",
      "ring QQ[x,y];\nmodule M = free(0, 3) / [x, 0], [y^4, x];\n",
      "# comment\nring QQ[x,y]; # trailing\nideal I = (x + y)^2, 2*x*(y - x);\n",
  };
  for (const char* text : inputs) {
    auto a = parse_input(text);
    auto printed = print_input(a);
    auto b = parse_input(printed);
    CHECK(same_input(a, b));
    CHECK(print_input(b) == printed);
  }
}

TEST_CASE("parser semantics") {
  auto in = parse_input("ring GF(3)[x,y];\nideal I = (x + y)^3, 4*x;\n");
  CHECK(in.ring->field.characteristic() == 3);
  auto x = Polynomial::variable(in.ring, 0), y = Polynomial::variable(in.ring, 1);
  CHECK(in.ideal->generators()[0] == x.pow(3) + y.pow(3));
  CHECK(in.ideal->generators()[1] == x);
  auto cx = parse_input("ring QQ[a,b,c];\ncomplex D = {1 2}, {2 3};\n");
  CHECK(cx.kind == InputKind::Complex);
  CHECK(cx.defining_ideal()->generators().size() == 1);
  auto md = parse_input("ring QQ[x];\nmodule M = free(0, 3) / [0, x];\n");
  CHECK(md.kind == InputKind::Module);
  CHECK_FALSE(md.defining_ideal().has_value());
  CHECK(md.presentation().ambient.twists == std::vector<int>{0, 3});
}

TEST_CASE("parse errors carry positions") {
  struct Bad {
    const char* text;
    int line;
  };
  Bad cases[] = {
      {"ring QQ[x,y];\nideal I = x^2 + y;\n", 2},     // not homogeneous
      {"ring QQ[x,y];\nideal I = x*z;\n", 2},         // unknown variable
      {"ring GF(4)[x];\nideal I = x;\n", 1},          // not prime
      {"ring QQ[x,y]\nideal I = x;\n", 2},            // missing ';'
      {"ideal I = x;\n", 1},                          // no ring
      {"ring QQ[x];\ncomplex D = {1 2};\n", 2},       // vertex out of range
      {"ring QQ[x,y];\nmodule M = free(0) / [x, y];\n", 2},
      {"ring QQ[x];\nideal I = x/0;\n", 2},
  };
  for (const auto& c : cases) {
    try {
      parse_input(c.text);
      FAIL("accepted: " << c.text);
    } catch (const ParseError& e) {
      CHECK(e.line() == c.line);
      CHECK(e.column() >= 1);
    }
  }
}

TEST_CASE("analysis report is deterministic") {
  auto in = parse_input("ring QQ[x,y];\nideal I = x^3, x^2*y;\n");
  AnalysisOptions opts;
  opts.seed = 5;
  auto a = analyze(in, opts), b = analyze(in, opts);
  CHECK(a.dump() == b.dump());
  CHECK(a["schema"] == kReportSchema);
  CHECK(a["complete"] == true);
  CHECK_FALSE(a.contains("timings"));
  opts.timings = true;
  auto t = analyze(in, opts);
  CHECK(t.contains("timings"));
  t.erase("timings");
  CHECK(t.dump() == a.dump());
}

TEST_CASE("sections can be switched off") {
  auto in = parse_input("ring QQ[x,y];\nideal I = x^3, x^2*y;\n");
  AnalysisOptions opts;
  opts.sections = {"hilbert"};
  auto r = analyze(in, opts);
  CHECK(r.contains("hilbert"));
  CHECK_FALSE(r.contains("betti"));
  CHECK_FALSE(r.contains("identities"));
  CHECK(known_sections().count("deficiency") == 1);
}

TEST_CASE("text rendering covers every path") {
  const char* inputs[] = {
      "ring QQ[x,y];\nideal I = x^3, x^2*y;\n",
      "ring GF(2)[x1,x2,x3,x4];\ncomplex D = {1 2}, {2 3}, {3 4}, {1 4};\n",
      "ring QQ[x];\nmodule M = free(0, 3) / [0, x];\n",
      "ring GF(2)[x];\nideal I = x^2;\n",
  };
  for (const char* text : inputs) {
    auto report = analyze(parse_input(text));
    auto s = render_text(report);
    CHECK(s.find("hilbert") != std::string::npos);
    CHECK(s.find("verdicts") != std::string::npos);
  }
  auto gf = render_text(analyze(parse_input(inputs[1])));
  CHECK(gf.find("F-pure true") != std::string::npos);
}

TEST_CASE("degree cap failures mark the report incomplete") {
  int old = default_degree_cap();
  set_default_degree_cap(3);
  auto r = analyze(parse_input("ring QQ[x,y,z];\nideal I = x^3 - y^2*z, x*y^2 - z^3;\n"));
  set_default_degree_cap(old);
  CHECK(r["complete"] == false);
}

TEST_CASE("fixture checks compare exactly") {
  auto dir = std::filesystem::temp_directory_path() / "hkit-fixture-test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.hk") << "ring QQ[x,y];\nideal I = x^3, x^2*y;\n";
    std::ofstream(dir / "a.expected.json") << R"({"annotations": {"du_bois": "paper-asserted"}, "checks": {"/hilbert/h_vector": [1,1,1,-1]}})";
    std::ofstream(dir / "b.hk") << "ring QQ[x,y];\nideal I = x^3, x^2*y;\n";
    std::ofstream(dir / "b.expected.json") << R"({"checks": {"/hilbert/dim": 2, "/nope": 1}})";
  }
  auto s = run_fixture_suite(dir);
  REQUIRE(s.outcomes.size() == 2);
  CHECK(s.outcomes[0].passed);
  CHECK(s.outcomes[0].report["annotations"]["du_bois"] == "paper-asserted");
  CHECK_FALSE(s.outcomes[1].passed);
  CHECK(s.outcomes[1].failures.size() == 2);
  std::filesystem::remove_all(dir);
}
