#include "hkit/identities.hpp"

#include <algorithm>

namespace hkit {

IdentityCheck duality_identity_check(const DeficiencyProfile& profile, const HilbertData& hm) {
  const int d = profile.dim;
  IdentityCheck c;
  c.lhs = hm.numerator.inverted().shifted(d);
  for (int i = 0; i <= d; ++i) {
    const auto& k = profile.K(i);
    if (k.is_zero()) continue;
    LaurentPoly term = k.hilbert.numerator * LaurentPoly::one_minus_t_pow(d - *k.dim());
    c.rhs = (d - i) % 2 ? c.rhs - term : c.rhs + term;
  }
  c.equal = c.lhs == c.rhs;
  return c;
}

HdCheck hd_check(const DeficiencyProfile& profile, const HilbertData& hm, int reg) {
  const int d = profile.dim;
  HdCheck c;
  for (int i = 0; i < d; ++i) {
    auto low = profile.K(i).initial_degree();
    if (low && *low < 0) c.gate_failures.push_back(i);
  }
  c.gate = c.gate_failures.empty();
  c.h_d = hm.h(d);
  for (int i = 0; i <= d; ++i) {
    std::int64_t v = profile.K(i).dim_in_degree(0);
    c.alternating_sum += (d - i) % 2 ? -v : v;
  }
  c.equal = c.h_d == c.alternating_sum;
  c.negativity_hypotheses = profile.depth == d - 1 && reg == d - 1 && profile.K(d).dim_in_degree(1) == 0;
  if (c.negativity_hypotheses) c.h_d_negative = c.h_d < 0;
  return c;
}

AuditResult h_vector_audit(const DeficiencyProfile& profile, const HilbertData& hm, int reg,
                               bool generated_in_degree_zero) {
  AuditResult a;
  a.cohen_macaulay = profile.depth == profile.dim;
  std::optional<int> mt = max_MT(profile);
  const int top = std::max(profile.dim, hm.numerator.is_zero() ? 0 : hm.numerator.high());
  int r = mt ? std::min(*mt, top) : top;
  if (r < 0) return a;
  a.r = r;

  for (int i = 0; i <= r; ++i)
    if (hm.h(i) < 0) {
      a.h_nonnegative = false;
      a.violations.push_back("h_" + std::to_string(i) + " < 0 under (MT_" + std::to_string(r) + ")");
    }
  if (hm.c(r) < 0) {
    a.c_r_nonnegative = false;
    a.violations.push_back("c_" + std::to_string(r) + " < 0 under (MT_" + std::to_string(r) + ")");
  }
  a.cm_forced_by_reg = reg < r;
  if (generated_in_degree_zero)
    for (int i = 0; i <= r; ++i)
      if (hm.h(i) == 0) a.cm_forced_by_vanishing_h = true;
  if ((a.cm_forced_by_reg || a.cm_forced_by_vanishing_h) && !a.cohen_macaulay)
    a.violations.push_back("Cohen-Macaulay criterion met at r = " + std::to_string(r) + " but depth < dim");
  return a;
}

SectionChainCheck section_chain_check(const GradedModulePresentation& m, const GenericSection& s, int r) {
  SectionChainCheck c;
  c.r = r;
  HilbertData hm = hilbert_module(m);
  HilbertData hl = hilbert_module(s.m_mod_l);
  HilbertData hpl = hilbert_module(s.m_prime_mod_l);
  const int low = std::min({hm.h_offset(), hl.h_offset(), 0});
  for (int i = low; i < r; ++i)
    if (hm.h(i) != hl.h(i)) c.h_below_preserved = false;
  c.h_r_nonincreasing = hm.h(r) >= hl.h(r);
  // c_r = e - sum_{i<r} h_i, summing from the lowest index present.
  auto c_r = [&](const HilbertData& h) {
    std::int64_t v = h.multiplicity();
    for (int i = std::min(low, h.h_offset()); i < r; ++i) v -= h.h(i);
    return v;
  };
  c.c_r_preserved_prime = c_r(hm) == c_r(hpl);
  if (*hm.dim > 1) c.c_r_preserved = c_r(hm) == c_r(hl);
  return c;
}

ExtOfExtCheck ext_of_ext_gate(const DeficiencyProfile& profile) {
  ExtOfExtCheck c;
  if (profile.nvars > 6) {
    c.skipped_reason = "more than 6 variables";
    return c;
  }
  if (profile.resolution.length() > 6) {
    c.skipped_reason = "resolution longer than 6";
    return c;
  }
  ProfileOptions opts;
  opts.regularity = false;
  for (const auto& k : profile.modules) {
    if (k.is_zero()) continue;
    DeficiencyProfile inner = deficiency_profile(k.presentation, opts);
    for (const auto& kk : inner.modules) {
      auto low = kk.initial_degree();
      if (low && *low < 0) c.failures.emplace_back(k.index, kk.index);
    }
  }
  c.evaluated = true;
  return c;
}

std::vector<PerDegreeCheck> degree_checks(const IdealData& ideal, const HilbertData& hr, int max_l) {
  const std::int64_t n = static_cast<std::int64_t>(ideal.ring()->nvars());
  const std::int64_t d = *hr.dim;
  const std::int64_t e = n - d;
  DegreeSequence s = degree_sequence(ideal, max_l);
  std::vector<PerDegreeCheck> out;
  for (int l = 0; l <= max_l; ++l) {
    PerDegreeCheck p;
    p.l = l;
    p.h_l = hr.h(l);
    p.formula = h_l_formula(e, d, s, l);
    auto ineq = degree_inequality(e, d, s, l);
    p.lhs = ineq.lhs;
    p.rhs = ineq.rhs;
    p.formula_matches = p.formula == p.h_l;
    p.inequality_holds = ineq.holds;
    out.push_back(p);
  }
  return out;
}

}  // namespace hkit
