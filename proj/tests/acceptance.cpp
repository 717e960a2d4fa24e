// Acceptance checks. Prints one line per criterion:
//   criterion N: PASS|FAIL  details
// Run with criterion numbers as arguments to select a subset.

#include <hkit/deficiency.hpp>
#include <hkit/fixtures.hpp>
#include <hkit/frobenius.hpp>
#include <hkit/identities.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"

using namespace hkit;

namespace {

const std::filesystem::path kFixtures = HKIT_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ParsedInput load(const std::string& stem) { return parse_input(read_file(kFixtures / (stem + ".hk"))); }

std::string vec(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

struct Loaded {
  std::string name;
  ParsedInput input;
};

std::vector<Loaded> all_fixtures() {
  std::vector<Loaded> out;
  for (const auto& f : list_fixtures(kFixtures)) out.push_back({f.stem().string(), parse_input(read_file(f))});
  return out;
}

bool generated_in_degree_zero(const GradedModulePresentation& m) {
  for (int t : m.ambient.twists)
    if (t != 0) return false;
  return true;
}

// MT_r => h_i >= 0 (i <= r), c_r >= 0; with reg < r or a vanishing h_i
// (i <= r, generated in degree 0) the module must be Cohen-Macaulay.
// Checked for every r the module satisfies, straight from the definitions.
std::vector<std::string> audit(const GradedModulePresentation& m) {
  std::vector<std::string> bad;
  auto h = hilbert_module(m);
  if (h.is_zero()) return bad;
  auto prof = deficiency_profile(m);
  auto inv = module_invariants(m);
  const int top = std::max(*h.dim, h.numerator.high());
  const int r_max = std::min(max_MT(prof).value_or(top), top);
  for (int r = 0; r <= r_max; ++r) {
    if (!check_MT(prof, r)) {
      bad.push_back("MT levels not monotone at r=" + std::to_string(r));
      continue;
    }
    bool zero_h = false;
    for (int i = 0; i <= r; ++i) {
      if (h.h(i) < 0) bad.push_back("h_" + std::to_string(i) + " < 0 under MT_" + std::to_string(r));
      zero_h = zero_h || (h.h(i) == 0 && i >= h.h_offset());
    }
    if (h.c(r) < 0) bad.push_back("c_" + std::to_string(r) + " < 0");
    if (inv.reg < r && !inv.cohen_macaulay) bad.push_back("reg < r but not CM at r=" + std::to_string(r));
    if (zero_h && generated_in_degree_zero(m) && !inv.cohen_macaulay)
      bad.push_back("vanishing h_i but not CM at r=" + std::to_string(r));
  }
  return bad;
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  struct Want {
    const char* stem;
    std::vector<std::int64_t> h;
  };
  std::vector<Want> wants = {{"x3-x2y", {1, 1, 1, -1}},
                             {"xuv-yu", {1, 1, 0, -1}},
                             {"quartic-monomial-curve", {1, 2, 2, -1}},
                             {"quadric-family-n2", {1, 2, -1}},
                             {"quadric-family-n3", {1, 3, -1}},
                             {"quadric-family-n4", {1, 4, -1}}};
  for (const auto& w : wants) {
    auto h = hilbert_module(load(w.stem).presentation());
    if (h.h_vector() != w.h || h.h_offset() != 0) o.fail(std::string(w.stem) + " h=" + vec(h.h_vector()));
  }
  // S + k(-3) over k[x]: 1/(1-t) + t^3 = (1 + t^3 - t^4)/(1-t)
  auto m = hilbert_module(load("free-plus-residue-field").presentation());
  if (m.numerator != LaurentPoly(0, {1, 0, 0, 1, -1}) || m.dim != 1) o.fail("S+k(-3) numerator " + m.numerator.to_string());
  for (int j = 0; j <= 6; ++j)
    if (m.value(j) != 1 + (j == 3)) o.fail("S+k(-3) H(" + std::to_string(j) + ")");
  double s = seconds_since(t0);
  if (s >= 5) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << "7 inputs, " << s << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  double n4 = 0;
  for (int n = 2; n <= 4; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto R = load("quadric-family-n" + std::to_string(n)).presentation();
    auto inv = module_invariants(R);
    auto prof = deficiency_profile(R);
    std::string tag = "n=" + std::to_string(n) + " ";
    if (inv.reg != 1) o.fail(tag + "reg " + std::to_string(inv.reg));
    if (inv.depth != n - 1) o.fail(tag + "depth " + std::to_string(inv.depth));
    if (inv.dim != n) o.fail(tag + "dim " + std::to_string(inv.dim));
    if (inv.cohen_macaulay) o.fail(tag + "CM");
    if (!check_Sr(prof, n - 1)) o.fail(tag + "not S_{n-1}");
    // H^{n-1} one-dimensional, concentrated in degree 2 - n
    auto lc = local_cohomology_hf(prof, n - 1, -10, 10);
    for (auto [j, v] : lc)
      if (v != (j == 2 - n ? 1 : 0)) o.fail(tag + "H^{n-1} in degree " + std::to_string(j));
    if (prof.K(n - 1).hilbert.numerator != LaurentPoly::monomial(n - 2)) o.fail(tag + "K_{n-1}");
    if (n == 4) n4 = seconds_since(t0);
  }
  if (n4 >= 60) o.fail("n=4 runtime " + std::to_string(n4) + " s");
  if (o.pass) o.detail << "n=2,3,4; n=4 in " << n4 << " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto mt = [&](const char* stem) { return deficiency_profile(load(stem).presentation()); };
  auto a = mt("x3-x2y"), b = mt("xuv-yu"), c = mt("quartic-monomial-curve"), d = mt("free-plus-residue-field");
  if (!(check_MT(a, 2) && !check_MT(a, 3))) o.fail("x3-x2y");
  if (check_MT(b, 2)) o.fail("xuv-yu satisfies MT_2");
  if (!(check_MT(c, 2) && !check_MT(c, 3))) o.fail("quartic-monomial-curve");
  if (!check_MT(d, 2)) o.fail("S+k(-3)");
  if (o.pass) o.detail << "MT_max 2, " << *max_MT(b) << ", 2, " << *max_MT(d);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int inputs = 0;
  for (const auto& f : all_fixtures()) {
    auto m = f.input.presentation();
    if (hilbert_module(m).is_zero()) continue;
    for (const auto& v : audit(m)) o.fail(f.name + ": " + v);
    ++inputs;
  }
  std::mt19937_64 rng(20240);
  int random_count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> nv(2, 5), count(1, 5);
    Ring r = make_ring(Field::rationals(), nv(rng));
    auto m = GradedModulePresentation::quotient_ring(oracle::random_monomial_ideal(r, count(rng), 4, rng));
    if (hilbert_module(m).is_zero()) continue;
    for (const auto& v : audit(m)) o.fail("random #" + std::to_string(trial) + ": " + v);
    ++random_count;
  }
  if (random_count < 100) o.fail("only " + std::to_string(random_count) + " random ideals");
  if (o.pass) o.detail << inputs << " fixtures + " << random_count << " random monomial ideals, 0 violations";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  std::uint64_t seed = 0;
  for (const auto& f : all_fixtures()) {
    if (checked == 25) break;
    auto m = f.input.presentation();
    auto h = hilbert_module(m);
    if (h.is_zero() || *h.dim == 0) continue;
    auto prof = deficiency_profile(m);
    int r = std::min(max_MT(prof).value_or(*h.dim), std::max(*h.dim, h.numerator.high()));
    if (r < 0) continue;
    auto s = generic_linear_section(m, {.seed = seed++});
    auto chain = section_chain_check(m, s, r);
    if (!chain.ok()) o.fail(f.name);
    // independent: h of M/lM below r and c_r of M'/lM' straight from the series
    auto hl = hilbert_module(s.m_mod_l), hpl = hilbert_module(s.m_prime_mod_l);
    for (int i = h.h_offset(); i < r; ++i)
      if (hl.h(i) != h.h(i)) o.fail(f.name + " h_" + std::to_string(i));
    if (hl.h(r) > h.h(r)) o.fail(f.name + " h_r increased");
    if (hpl.c(r) != h.c(r)) o.fail(f.name + " c_r via M'/lM'");
    ++checked;
  }
  if (checked < 25) o.fail("only " + std::to_string(checked) + " fixtures");
  if (o.pass) o.detail << checked << " seeded fixtures";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int n = 0;
  for (const auto& f : all_fixtures()) {
    auto m = f.input.presentation();
    auto h = hilbert_module(m);
    if (h.is_zero()) continue;
    auto prof = deficiency_profile(m, {.regularity = false});
    auto id = duality_identity_check(prof, h);
    // recompute the right-hand side here rather than trusting the check
    const int d = *h.dim;
    LaurentPoly rhs;
    for (int i = 0; i <= d; ++i) {
      const auto& k = prof.K(i);
      if (k.is_zero()) continue;
      auto term = k.hilbert.numerator * LaurentPoly::one_minus_t_pow(d - *k.dim());
      rhs = (d - i) % 2 ? rhs - term : rhs + term;
    }
    if (!id.equal || rhs != h.numerator.inverted().shifted(d)) o.fail(f.name);
    ++n;
  }
  if (o.pass) o.detail << n << " fixtures";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int gated = 0;
  for (const auto& f : all_fixtures()) {
    auto m = f.input.presentation();
    auto h = hilbert_module(m);
    if (h.is_zero()) continue;
    auto prof = deficiency_profile(m);
    auto hd = hd_check(prof, h, regularity(m));
    if (!hd.gate) continue;
    ++gated;
    const int d = *h.dim;
    std::int64_t alt = 0;
    for (int i = 0; i <= d; ++i) alt += ((d - i) % 2 ? -1 : 1) * prof.K(i).dim_in_degree(0);
    if (!hd.equal || alt != h.h(d)) o.fail(f.name + " h_d " + std::to_string(h.h(d)) + " vs " + std::to_string(alt));
  }
  auto skew = load("two-skew-lines-complex").presentation();
  auto h = hilbert_module(skew);
  auto inv = module_invariants(skew);
  auto prof = deficiency_profile(skew);
  const int d = *h.dim;
  bool hyp = inv.depth == d - 1 && inv.reg == d - 1 && prof.K(d).dim_in_degree(1) == 0;
  if (!hyp) o.fail("two skew lines miss the negativity hypotheses");
  if (!(h.h(d) < 0)) o.fail("two skew lines h_d = " + std::to_string(h.h(d)));
  auto hd = hd_check(prof, h, inv.reg);
  if (!hd.negativity_hypotheses || hd.h_d_negative != true) o.fail("hd_check disagrees on two skew lines");
  if (o.pass) o.detail << gated << " gated fixtures; two skew lines h_2 = " << h.h(d);
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto in = load("two-skew-lines-real");
  auto h = hilbert_module(in.presentation());
  auto I = *in.defining_ideal();
  std::vector<Monomial> lead = I.initial_ideal();
  int height = monomial_ideal_height(lead, in.ring->nvars());
  std::int64_t e = h.multiplicity();
  if (h.h(2) != -1) o.fail("h_2 = " + std::to_string(h.h(2)));
  if (e != 4) o.fail("e(R) = " + std::to_string(e) + ", expected 4");
  o.detail << "h_2 = " << h.h(2) << ", e(R) = " << e << " vs 1+ht = " << 1 + height;
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int sqfree = 0, gate = 0;
  for (const auto& f : list_fixtures(kFixtures)) {
    std::string text = read_file(f);
    auto base = parse_input(text);
    auto ideal = base.defining_ideal();
    if (!ideal) continue;
    bool squarefree = true;
    for (const auto& g : ideal->generators())
      for (const auto& t : g.terms())
        for (int x : t.mono.exponents()) squarefree = squarefree && x <= 1;
    if (!squarefree || ideal->generators().empty()) continue;
    for (int p : {2, 3}) {
      std::string swapped = text;
      auto at = swapped.find("ring ") + 5;
      auto bracket = swapped.find('[', at);
      swapped.replace(at, bracket - at, "GF(" + std::to_string(p) + ")");
      auto in = parse_input(swapped);
      auto fp = fedder_f_pure(*in.defining_ideal());
      if (!fp.f_pure) o.fail(f.stem().string() + " over GF(" + std::to_string(p) + ")");
      ++sqfree;
      if (p == 2 && gate < 8) {
        auto prof = deficiency_profile(in.presentation());
        auto ext = ext_of_ext_gate(prof);
        if (!ext.evaluated) continue;
        if (!ext.holds()) o.fail(f.stem().string() + " Ext-of-Ext gate");
        ++gate;
      }
    }
  }
  auto x2 = load("gf2-x2");
  if (fedder_f_pure(*x2.defining_ideal()).f_pure) o.fail("(x^2) over GF(2) reported F-pure");
  if (gate < 5) o.fail("only " + std::to_string(gate) + " Ext-of-Ext gates");
  double s = seconds_since(t0);
  if (s >= 120) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << sqfree << " square-free checks, " << gate << " gates, " << s << " s";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int n = 0;
  for (const auto& f : all_fixtures()) {
    if (!f.input.complex || f.input.complex->vertices() > 8) continue;
    const auto& c = *f.input.complex;
    if (f.input.ring->field.is_prime_field()) continue;
    auto m = f.input.presentation();
    auto h = hilbert_module(m);
    const int d = c.dimension() + 1;
    auto comb = f_to_h(c.f_vector(), d);
    for (int i = 0; i <= std::max(d, h.numerator.is_zero() ? 0 : h.numerator.high()); ++i)
      if ((i <= d ? comb[i] : 0) != h.h(i)) o.fail(f.name + " h_" + std::to_string(i));
    auto prof = deficiency_profile(m, {.regularity = false});
    int r = max_Sr(prof).value_or(d);
    for (int i = 0; i <= std::min(r, d); ++i)
      if (h.h(i) < 0) o.fail(f.name + " h_" + std::to_string(i) + " < 0 under S_" + std::to_string(r));
    ++n;
  }
  if (n < 20) o.fail("only " + std::to_string(n) + " complexes");
  if (o.pass) o.detail << n << " complexes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
  if (selected.empty())
    for (int k = 1; k <= 10; ++k) selected.insert(k);
  bool all = true;
  for (int k : selected) {
    if (k < 1 || k > 10) {
      std::cerr << "no criterion " << k << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
