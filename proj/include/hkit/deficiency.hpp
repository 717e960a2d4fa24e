#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hkit/resolution.hpp"

namespace hkit {

/// K_i = Ext^{n-i}_S(M, S(-n)).
struct DeficiencyModule {
  int index = 0;
  GradedModulePresentation presentation;
  HilbertData hilbert;
  /// Set when requested and K_i != 0.
  std::optional<int> reg;

  bool is_zero() const { return hilbert.is_zero(); }
  std::optional<int> dim() const { return hilbert.dim; }
  std::int64_t dim_in_degree(int j) const { return hilbert.value(j); }
  /// Lowest degree of a nonzero component; empty for K_i = 0.
  std::optional<int> initial_degree() const;
};

struct ProfileOptions {
  bool regularity = true;
  /// Compute every i in 0..n instead of only depth..dim (the others vanish).
  bool all_indices = false;
  /// Evaluate the K_i on worker threads.
  bool parallel = true;
};

struct DeficiencyProfile {
  std::size_t nvars = 0;
  int dim = 0;
  int depth = 0;
  int pd = 0;
  FreeComplex resolution;
  /// modules[i] for i = 0..dim (0..n with all_indices).
  std::vector<DeficiencyModule> modules;

  /// Zero module for indices outside the stored range.
  const DeficiencyModule& K(int i) const;
};

/// Homology of Hom(F_., S(-n)) for the minimal resolution F_. of M.
/// Throws std::invalid_argument for the zero module.
DeficiencyProfile deficiency_profile(const GradedModulePresentation& m, const ProfileOptions& options = {});

/// Transposed maps of the dual complex Hom(F_., S(-n)); the result's twists
/// are n - a for every generator degree a, and maps[j] : D_j -> D_{j+1}.
FreeComplex dual_complex(const FreeComplex& resolution);

/// reg K_i <= i - r for every i < dim.
bool check_MT(const DeficiencyProfile& p, int r);
/// Largest r with (MT_r): min over nonzero K_i, i < dim, of i - reg K_i.
/// Empty when no such K_i exists (M Cohen-Macaulay: every r holds).
std::optional<int> max_MT(const DeficiencyProfile& p);

/// dim K_i <= i - r for every i < dim (zero module has dimension -infinity).
bool check_Sr(const DeficiencyProfile& p, int r);
std::optional<int> max_Sr(const DeficiencyProfile& p);

/// dim K_i < i for every i < dim.
bool check_unmixed(const DeficiencyProfile& p);

/// j -> dim_k H^i_m(M)_j = dim_k (K_i)_{-j} for j in [lo, hi].
std::map<int, std::int64_t> local_cohomology_hf(const DeficiencyProfile& p, int i, int lo, int hi);

}  // namespace hkit
