#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkit/deficiency.hpp"
#include "hkit/generic_section.hpp"

namespace hkit {

struct IdentityCheck {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal = false;
};

/// p_M(1/t) t^d  versus  sum_{i=0}^{d} (-1)^{d-i} p_{K_i}(t) (1-t)^{d - dim K_i}.
IdentityCheck duality_identity_check(const DeficiencyProfile& profile, const HilbertData& hm);

struct HdCheck {
  /// (K_i)_{<0} = 0 for every i < d.
  bool gate = false;
  std::vector<int> gate_failures;
  std::int64_t h_d = 0;
  /// sum_{i=0}^{d} (-1)^{d-i} dim_k (K_i)_0
  std::int64_t alternating_sum = 0;
  bool equal = false;
  /// depth = reg = d - 1 and (K_d)_1 = 0.
  bool negativity_hypotheses = false;
  /// Set when the hypotheses hold: whether h_d < 0.
  std::optional<bool> h_d_negative;
};

HdCheck hd_check(const DeficiencyProfile& profile, const HilbertData& hm, int reg);

struct AuditResult {
  /// Level audited (largest MT level, capped at the top h index); empty when
  /// M is not (MT_0).
  std::optional<int> r;
  bool h_nonnegative = true;
  bool c_r_nonnegative = true;
  bool cm_forced_by_reg = false;
  bool cm_forced_by_vanishing_h = false;
  bool cohen_macaulay = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks h_i >= 0 (i <= r), c_r >= 0, and the two Cohen-Macaulay criteria at
/// the largest r for which M is (MT_r).
AuditResult h_vector_audit(const DeficiencyProfile& profile, const HilbertData& hm, int reg,
                               bool generated_in_degree_zero);

struct SectionChainCheck {
  int r = 0;
  bool h_below_preserved = true;
  bool h_r_nonincreasing = true;
  bool c_r_preserved_prime = true;
  /// Only evaluated for d > 1.
  std::optional<bool> c_r_preserved;
  bool ok() const {
    return h_below_preserved && h_r_nonincreasing && c_r_preserved_prime && c_r_preserved.value_or(true);
  }
};

/// h_i(M) = h_i(M/lM) for i < r, h_r(M) >= h_r(M/lM), c_r(M) = c_r(M'/lM'),
/// and c_r(M) = c_r(M/lM) when d > 1.
SectionChainCheck section_chain_check(const GradedModulePresentation& m, const GenericSection& s, int r);

struct ExtOfExtCheck {
  bool evaluated = false;
  std::string skipped_reason;
  /// (i, j) with H^j_m(K_i)_{>0} != 0.
  std::vector<std::pair<int, int>> failures;
  bool holds() const { return evaluated && failures.empty(); }
};

/// H^j_m(K_i)_{>0} = 0 for all i, j, read off the deficiency modules of each
/// K_i. Skipped above n = 6 or resolution length 6.
ExtOfExtCheck ext_of_ext_gate(const DeficiencyProfile& profile);

struct PerDegreeCheck {
  int l = 0;
  std::int64_t h_l = 0;
  std::int64_t formula = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool formula_matches = false;
  bool inequality_holds = false;
};

/// h_l formula and the s_l inequality for l = 0..max_l, with e = n - d.
std::vector<PerDegreeCheck> degree_checks(const IdealData& ideal, const HilbertData& hr, int max_l);

}  // namespace hkit
