#include "hkit/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "hkit/frobenius.hpp"
#include "hkit/identities.hpp"

namespace hkit {

const std::set<std::string>& known_sections() {
  static const std::set<std::string> s{"hilbert", "betti", "deficiency", "charp", "identities"};
  return s;
}

namespace {

Json laurent_json(const LaurentPoly& p) {
  return Json{{"offset", p.is_zero() ? 0 : p.low()}, {"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json hilbert_json(const HilbertData& h) {
  Json j;
  j["numerator"] = laurent_json(h.numerator);
  j["dim"] = optional_int(h.dim);
  j["h_offset"] = h.h_offset();
  j["h_vector"] = h.h_vector();
  j["multiplicity"] = h.multiplicity();
  Json c = Json::object();
  if (!h.is_zero())
    for (int r = h.h_offset(); r <= h.numerator.high() + 1; ++r) c[std::to_string(r)] = h.c(r);
  j["c_r"] = c;
  return j;
}

Json betti_json(const BettiTable& b) {
  Json t = Json::object();
  for (const auto& [k, v] : b.entries()) t["(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"] = v;
  return t;
}

// Runs f, storing its value or the error message.
template <class T>
struct Step {
  std::optional<T> value;
  std::string error;
  double ms = 0;

  void run(const std::function<T()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      value = f();
    } catch (const std::exception& e) {
      error = e.what();
    }
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  bool ok() const { return value.has_value(); }
};

Json error_json(const std::string& what) { return Json{{"error", what}}; }

bool generated_in_degree_zero(const GradedModulePresentation& p) {
  GradedModulePresentation q = prune(p);
  for (int t : q.ambient.twists)
    if (t != 0) return false;
  return true;
}

}  // namespace

Json analyze(const ParsedInput& input, const AnalysisOptions& options) {
  auto enabled = [&](const char* s) { return options.sections.count(s) > 0; };
  Json r;
  r["schema"] = kReportSchema;
  r["input"] = Json{{"name", input.name},
                    {"kind", input.kind == InputKind::Ideal     ? "ideal"
                             : input.kind == InputKind::Complex ? "complex"
                                                                : "module"},
                    {"text", print_input(input)}};
  r["ring"] = Json{{"n", input.ring->nvars()},
                   {"field", input.ring->field.name()},
                   {"characteristic", input.ring->field.characteristic()},
                   {"variables", input.ring->var_names},
                   {"order", input.ring->order == MonomialOrder::Lex ? "lex" : "degrevlex"}};
  r["seed"] = options.seed;
  bool complete = true;
  Json timings = Json::object();

  const GradedModulePresentation pres = input.presentation();
  const std::optional<IdealData> ideal = input.defining_ideal();
  const bool char_p = input.ring->field.characteristic() != 0;

  Step<HilbertData> hm;
  hm.run([&] { return hilbert_module(pres); });
  timings["hilbert_ms"] = hm.ms;

  const bool want_betti = enabled("betti") || enabled("deficiency") || enabled("identities");
  Step<ModuleInvariants> inv;
  if (want_betti) {
    inv.run([&] { return module_invariants(pres); });
    timings["betti_ms"] = inv.ms;
  }

  const bool want_profile = enabled("deficiency") || enabled("identities");
  Step<DeficiencyProfile> prof;
  if (want_profile) {
    prof.run([&] { return deficiency_profile(pres); });
    timings["deficiency_ms"] = prof.ms;
  }

  Step<FedderResult> fedder;
  if (char_p && ideal && (enabled("charp") || enabled("identities"))) {
    fedder.run([&] { return fedder_f_pure(*ideal); });
    timings["charp_ms"] = fedder.ms;
  }

  if (enabled("hilbert")) {
    if (hm.ok()) {
      r["hilbert"] = hilbert_json(*hm.value);
    } else {
      r["hilbert"] = error_json(hm.error);
      complete = false;
    }
  }

  if (enabled("betti")) {
    if (inv.ok()) {
      const auto& v = *inv.value;
      r["betti"] = Json{{"table", betti_json(v.betti)}, {"text", v.betti.to_text()}, {"pd", v.pd}, {"reg", v.reg},
                        {"depth", v.depth}, {"dim", v.dim}, {"cohen_macaulay", v.cohen_macaulay}};
    } else {
      r["betti"] = error_json(inv.error);
      complete = false;
    }
  }

  if (enabled("deficiency")) {
    if (prof.ok()) {
      const auto& p = *prof.value;
      Json mods = Json::array();
      Json lc = Json::object();
      for (const auto& k : p.modules) {
        Json m{{"i", k.index}, {"zero", k.is_zero()}};
        if (!k.is_zero()) {
          m["dim"] = *k.dim();
          m["reg"] = optional_int(k.reg);
          m["initial_degree"] = *k.initial_degree();
          m["numerator"] = laurent_json(k.hilbert.numerator);
          // H^i_m(M)_j = (K_i)_{-j}; window reaches three degrees past the
          // generators, or the whole module when it has finite length.
          int a = *k.initial_degree();
          int top = *k.dim() == 0 ? k.hilbert.numerator.high() : a + 3;
          Json w = Json::object();
          for (int j = -top; j <= -a; ++j) w[std::to_string(j)] = k.dim_in_degree(-j);
          lc[std::to_string(k.index)] = w;
        }
        mods.push_back(m);
      }
      r["deficiency"] = Json{{"dim", p.dim}, {"depth", p.depth}, {"pd", p.pd}, {"modules", mods},
                             {"local_cohomology", lc}};
      Json verdicts;
      verdicts["cohen_macaulay"] = p.depth == p.dim;
      verdicts["MT_max"] = optional_int(max_MT(p));
      verdicts["S_max"] = optional_int(max_Sr(p));
      verdicts["unmixed"] = check_unmixed(p);
      if (fedder.ok()) verdicts["f_pure"] = fedder.value->f_pure;
      r["verdicts"] = verdicts;
    } else {
      r["deficiency"] = error_json(prof.error);
      complete = false;
    }
  }

  if (enabled("charp") && char_p) {
    if (!ideal) {
      r["charp"] = Json{{"skipped", "Fedder's criterion applies to quotient rings"}};
    } else if (fedder.ok()) {
      std::vector<std::string> gens;
      for (const auto& g : fedder.value->colon_generators) gens.push_back(g.to_string());
      r["charp"] = Json{{"p", fedder.value->p}, {"f_pure", fedder.value->f_pure}, {"colon_generators", gens}};
    } else {
      r["charp"] = error_json(fedder.error);
      complete = false;
    }
  }

  if (enabled("identities")) {
    auto t0 = std::chrono::steady_clock::now();
    Json id;
    if (!hm.ok() || !inv.ok() || !prof.ok()) {
      id = error_json("requires the Hilbert series, resolution and deficiency profile");
      complete = false;
    } else {
      const auto& h = *hm.value;
      const auto& p = *prof.value;
      const int reg = inv.value->reg;
      try {
        auto dual = duality_identity_check(p, h);
        id["duality"] = Json{{"lhs", laurent_json(dual.lhs)}, {"rhs", laurent_json(dual.rhs)}, {"equal", dual.equal}};

        auto hd = hd_check(p, h, reg);
        Json hdj{{"gate", hd.gate}, {"gate_failures", hd.gate_failures}, {"h_d", hd.h_d},
                 {"alternating_sum", hd.alternating_sum}, {"equal", hd.equal},
                 {"negativity_hypotheses", hd.negativity_hypotheses}};
        hdj["h_d_negative"] = hd.h_d_negative ? Json(*hd.h_d_negative) : Json(nullptr);
        id["hd"] = hdj;

        auto audit = h_vector_audit(p, h, reg, generated_in_degree_zero(pres));
        id["audit"] = Json{{"r", optional_int(audit.r)},
                           {"h_nonnegative", audit.h_nonnegative},
                           {"c_r_nonnegative", audit.c_r_nonnegative},
                           {"cm_forced_by_reg", audit.cm_forced_by_reg},
                           {"cm_forced_by_vanishing_h", audit.cm_forced_by_vanishing_h},
                           {"cohen_macaulay", audit.cohen_macaulay},
                           {"violations", audit.violations}};

        if (ideal) {
          auto s_max = max_Sr(p);
          bool certified = fedder.ok() && fedder.value->f_pure;
          Json rows = Json::array();
          for (const auto& c : degree_checks(*ideal, h, options.degree_check_limit)) {
            bool covered = certified && (!s_max || c.l <= *s_max);
            rows.push_back(Json{{"l", c.l},
                                {"h_l", c.h_l},
                                {"formula", c.formula},
                                {"formula_matches", c.formula_matches},
                                {"lhs", c.lhs},
                                {"rhs", c.rhs},
                                {"inequality_holds", c.inequality_holds},
                                {"hypotheses_certified", covered}});
          }
          id["degree_checks"] = rows;
          const auto n = static_cast<std::int64_t>(input.ring->nvars());
          id["multiplicity_bound"] = Json{{"e_R", h.multiplicity()}, {"height", n - *h.dim},
                                          {"one_plus_height", 1 + n - *h.dim}};
        }

        if (h.dim && *h.dim >= 1) {
          auto mt = max_MT(p);
          const int top = std::max(*h.dim, h.numerator.high());
          int rr = mt ? std::min(*mt, top) : top;
          Json sj;
          try {
            GenericSectionOptions so;
            so.seed = options.seed;
            auto sec = generic_linear_section(pres, so);
            sj["l"] = sec.l.to_string();
            sj["attempts"] = sec.attempts;
            sj["warnings"] = sec.warnings;
            if (rr >= 0) {
              auto chain = section_chain_check(pres, sec, rr);
              sj["r"] = rr;
              sj["h_below_preserved"] = chain.h_below_preserved;
              sj["h_r_nonincreasing"] = chain.h_r_nonincreasing;
              sj["c_r_preserved_prime"] = chain.c_r_preserved_prime;
              sj["c_r_preserved"] = chain.c_r_preserved ? Json(*chain.c_r_preserved) : Json(nullptr);
              sj["ok"] = chain.ok();
            }
          } catch (const std::exception& e) {
            sj = error_json(e.what());
            complete = false;
          }
          id["generic_section"] = sj;
        }

        if (fedder.ok() && fedder.value->f_pure) {
          auto g = ext_of_ext_gate(p);
          Json gj{{"evaluated", g.evaluated}, {"holds", g.holds()}};
          if (!g.evaluated) gj["skipped"] = g.skipped_reason;
          Json fails = Json::array();
          for (auto [i, j] : g.failures) fails.push_back(Json{{"i", i}, {"j", j}});
          gj["failures"] = fails;
          id["ext_of_ext"] = gj;
        }

        if (input.kind == InputKind::Complex) {
          const auto& cx = *input.complex;
          auto f = cx.f_vector();
          auto comb = f_to_h(f, cx.dimension() + 1);
          auto alg = h.h_vector();
          auto trimmed = comb;
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          auto s_max = max_Sr(p);
          int d = *h.dim;
          int rr = s_max ? std::min(*s_max, d) : d;
          bool nonneg = true;
          for (int i = 0; i <= rr; ++i)
            if (h.h(i) < 0) nonneg = false;
          id["simplicial"] = Json{{"f_vector", f},
                                  {"h_combinatorial", comb},
                                  {"h_algebraic", alg},
                                  {"f_to_h_matches", trimmed == alg && h.h_offset() == 0},
                                  {"S_r_used", rr},
                                  {"h_nonnegative_up_to_r", nonneg}};
        }
      } catch (const std::exception& e) {
        id["error"] = e.what();
        complete = false;
      }
    }
    r["identities"] = id;
    timings["identities_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  r["complete"] = complete;
  if (options.timings) r["timings"] = timings;
  return r;
}

namespace {

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].dump();
  return s + ")";
}

std::string or_all(const Json& v) { return v.is_null() ? "all" : v.dump(); }

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  const auto& ring = r["ring"];
  os << "== " << r["input"]["name"].get<std::string>() << " (" << r["input"]["kind"].get<std::string>() << ") over "
     << ring["field"].get<std::string>() << "[";
  for (std::size_t k = 0; k < ring["variables"].size(); ++k)
    os << (k ? "," : "") << ring["variables"][k].get<std::string>();
  os << "]\n";
  auto section = [&](const char* key) -> const Json* {
    if (!r.contains(key)) return nullptr;
    const Json& s = r[key];
    if (s.contains("error")) {
      os << key << ": ERROR " << s["error"].get<std::string>() << "\n";
      return nullptr;
    }
    return &s;
  };
  if (const Json* h = section("hilbert")) {
    os << "hilbert    p(t) = " << (*h)["numerator"]["text"].get<std::string>() << "\n";
    os << "           dim " << (*h)["dim"].dump() << ", e " << (*h)["multiplicity"].dump() << ", h = "
       << vec_text((*h)["h_vector"]);
    if ((*h)["h_offset"].get<int>() != 0) os << " from index " << (*h)["h_offset"].dump();
    os << "\n";
  }
  if (const Json* b = section("betti")) {
    std::istringstream grid((*b)["text"].get<std::string>());
    std::string line;
    os << "betti\n";
    while (std::getline(grid, line)) os << "  " << line << "\n";
    os << "           pd " << (*b)["pd"].dump() << ", reg " << (*b)["reg"].dump() << ", depth "
       << (*b)["depth"].dump() << ", CM " << (*b)["cohen_macaulay"].dump() << "\n";
  }
  if (const Json* d = section("deficiency")) {
    os << "deficiency\n";
    for (const auto& m : (*d)["modules"]) {
      if (m["zero"].get<bool>()) continue;
      os << "  K_" << m["i"].dump() << "  dim " << m["dim"].dump() << ", reg " << m["reg"].dump() << ", p = "
         << m["numerator"]["text"].get<std::string>() << "\n";
    }
    if (r.contains("verdicts")) {
      const auto& v = r["verdicts"];
      os << "verdicts   MT_max " << or_all(v["MT_max"]) << ", S_max " << or_all(v["S_max"]) << ", unmixed "
         << v["unmixed"].dump() << ", CM " << v["cohen_macaulay"].dump();
      if (v.contains("f_pure")) os << ", F-pure " << v["f_pure"].dump();
      os << "\n";
    }
  }
  if (const Json* c = section("charp")) {
    if (c->contains("skipped")) {
      os << "charp      skipped: " << (*c)["skipped"].get<std::string>() << "\n";
    } else {
      os << "charp      p = " << (*c)["p"].dump() << ", F-pure " << (*c)["f_pure"].dump() << "\n";
    }
  }
  if (const Json* id = section("identities")) {
    if (id->contains("duality"))
      os << "identities numerator duality " << ((*id)["duality"]["equal"].get<bool>() ? "holds" : "FAILS") << "\n";
    if (id->contains("hd")) {
      const auto& hd = (*id)["hd"];
      os << "           h_d " << hd["h_d"].dump() << " vs alternating sum " << hd["alternating_sum"].dump()
         << " (gate " << hd["gate"].dump() << ")\n";
    }
    if (id->contains("audit")) {
      const auto& a = (*id)["audit"];
      os << "           audit at r = " << a["r"].dump() << ": "
         << (a["violations"].empty() ? "no violations" : std::to_string(a["violations"].size()) + " violations")
         << "\n";
    }
    if (id->contains("generic_section") && !(*id)["generic_section"].contains("error")) {
      const auto& g = (*id)["generic_section"];
      os << "           generic l = " << g["l"].get<std::string>();
      if (g.contains("ok")) os << ", section chain " << (g["ok"].get<bool>() ? "ok" : "FAILS");
      os << "\n";
    }
    if (id->contains("ext_of_ext")) {
      const auto& g = (*id)["ext_of_ext"];
      os << "           Ext-of-Ext gate "
         << (g["evaluated"].get<bool>() ? (g["holds"].get<bool>() ? "holds" : "FAILS")
                                        : "skipped (" + g["skipped"].get<std::string>() + ")")
         << "\n";
    }
    if (id->contains("simplicial")) {
      const auto& s = (*id)["simplicial"];
      os << "           f = " << vec_text(s["f_vector"]) << ", f_to_h " << vec_text(s["h_combinatorial"])
         << (s["f_to_h_matches"].get<bool>() ? " matches" : " DIFFERS") << "\n";
    }
  }
  if (r.contains("annotations")) {
    // hypotheses we cannot certify (Du Bois in char 0), carried from the fixture
    os << "annotated ";
    for (const auto& [k, v] : r["annotations"].items()) os << " " << k << ": " << v.get<std::string>();
    os << "\n";
  }
  if (!r["complete"].get<bool>()) os << "(incomplete report)\n";
  if (r.contains("timings")) {
    os << "timings   ";
    for (const auto& [k, v] : r["timings"].items()) os << " " << k << "=" << v.get<double>();
    os << "\n";
  }
  return os.str();
}

}  // namespace hkit
