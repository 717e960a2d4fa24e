#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkit/hilbert.hpp"
#include "hkit/presentation.hpp"

namespace hkit {

/// F_0 <- F_1 <- ... <- F_len of twisted free modules. maps[i] : F_{i+1} -> F_i
/// is stored by columns: maps[i][j] is the image of the j-th basis vector of
/// F_{i+1}, an element of F_i.
struct FreeComplex {
  Ring ring;
  std::vector<std::vector<int>> twists;
  std::vector<std::vector<ModuleElement>> maps;

  std::size_t length() const { return twists.empty() ? 0 : twists.size() - 1; }
  FreeModule module(std::size_t i) const { return FreeModule{ring, twists.at(i)}; }
  /// d_i d_{i+1} = 0 at every spot (exact check).
  bool is_complex() const;
  /// True when no map has a degree-0 unit entry.
  bool is_minimal() const;
};

/// Iterated syzygies of a presentation. With minimal = true every stage uses a
/// minimal generating set; otherwise stage 1 uses the full reduced Gröbner
/// basis of the relations and later stages the Gröbner bases of the syzygy
/// modules (generally non-minimal). The presentation is pruned first.
FreeComplex free_resolution(const GradedModulePresentation& p, bool minimal = true);

/// Cancels degree-0 unit entries stage by stage from the left.
FreeComplex minimalize(FreeComplex complex);

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeComplex& minimal_resolution);

  /// beta_{i,j}
  int at(int i, int j) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  /// Empty for the zero module.
  std::optional<int> projective_dimension() const;
  std::optional<int> regularity() const;

  /// {"(i,j)": beta}
  std::string to_json() const;
  /// Macaulay2-style grid: columns i, rows j - i.
  std::string to_text() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

/// Resolution-derived invariants of a nonzero module.
struct ModuleInvariants {
  BettiTable betti;
  int pd = 0;
  int reg = 0;
  int depth = 0;
  int dim = 0;
  bool cohen_macaulay = false;
};

/// Throws std::invalid_argument for the zero module.
ModuleInvariants module_invariants(const GradedModulePresentation& p);
int regularity(const GradedModulePresentation& p);
int depth(const GradedModulePresentation& p);
bool is_cohen_macaulay(const GradedModulePresentation& p);

/// sum_i (-1)^i K(F_i), the K-polynomial predicted by the complex.
LaurentPoly euler_kpoly(const FreeComplex& complex);

}  // namespace hkit
