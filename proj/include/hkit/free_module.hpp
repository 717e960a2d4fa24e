#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hkit/polynomial.hpp"

namespace hkit {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coef;
};

/// Term order on a twisted free module: components below `block_split`
/// dominate the rest (elimination block), then twisted degree, then the ring's
/// monomial order, then the smaller component index.
class ModuleOrder {
 public:
  static constexpr std::size_t kNoSplit = std::numeric_limits<std::size_t>::max();

  ModuleOrder(MonomialOrder mono, std::vector<int> twists, std::size_t block_split = kNoSplit)
      : mono_(mono), twists_(std::move(twists)), split_(block_split) {}

  int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (split_ != kNoSplit) {
      bool a_low = ac >= split_, b_low = bc >= split_;
      if (a_low != b_low) return a_low ? -1 : 1;
    }
    int da = am.degree() + twists_[ac], db = bm.degree() + twists_[bc];
    if (da != db) return da < db ? -1 : 1;
    int c = hkit::compare(am, bm, mono_);
    if (c != 0) return c;
    if (ac != bc) return ac < bc ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

  int degree(const ModTerm& t) const { return t.mono.degree() + twists_[t.comp]; }
  const std::vector<int>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  std::size_t block_split() const { return split_; }
  MonomialOrder monomial_order() const { return mono_; }

 private:
  MonomialOrder mono_;
  std::vector<int> twists_;
  std::size_t split_;
};

/// Sparse element of a free module. Terms are sorted descending under the
/// ambient ModuleOrder; no zero coefficients.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::vector<ModTerm> sorted_terms) : terms_(std::move(sorted_terms)) {}

  const std::vector<ModTerm>& terms() const { return terms_; }
  std::vector<ModTerm>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModTerm& lead() const { return terms_.front(); }

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  std::vector<ModTerm> terms_;
};

/// Arithmetic on module elements under a fixed order and field.
class ModuleArith {
 public:
  ModuleArith(const ModuleOrder& order, const Field& field) : order_(order), field_(field) {}

  /// Sorts, merges duplicates, drops zeros, reduces coefficients into the field.
  ModuleElement normalize(std::vector<ModTerm> terms) const;
  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement sub(const ModuleElement& a, const ModuleElement& b) const;
  /// a - c * m * b
  ModuleElement sub_multiple(const ModuleElement& a, const Scalar& c, const Monomial& m,
                             const ModuleElement& b) const;
  ModuleElement scale(const ModuleElement& a, const Scalar& c) const;
  ModuleElement times(const ModuleElement& a, const Monomial& m, const Scalar& c) const;
  ModuleElement times(const ModuleElement& a, const Polynomial& f) const;
  /// Divides by the lead coefficient.
  ModuleElement monic(const ModuleElement& a) const;

  std::optional<int> degree(const ModuleElement& a) const;
  bool is_homogeneous(const ModuleElement& a) const;

  const ModuleOrder& order() const { return order_; }
  const Field& field() const { return field_; }

 private:
  const ModuleOrder& order_;
  const Field& field_;
};

/// Graded free module  F = ⊕ S(-twists[i]); generator i sits in degree twists[i].
struct FreeModule {
  Ring ring;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  ModuleOrder order() const { return ModuleOrder(ring->order, twists); }

  ModuleElement basis(std::size_t i) const;
  /// Element from per-component polynomials (size must equal rank).
  ModuleElement from_polys(const std::vector<Polynomial>& entries) const;
  /// Polynomial in component `comp`.
  Polynomial component(const ModuleElement& v, std::size_t comp) const;
  ModuleElement times(const ModuleElement& v, const Polynomial& f) const;
  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement sub(const ModuleElement& a, const ModuleElement& b) const;

  std::optional<int> degree(const ModuleElement& v) const;
  bool is_homogeneous(const ModuleElement& v) const;
  /// Throws std::invalid_argument on component index out of range.
  void validate(const ModuleElement& v) const;

  std::string to_string(const ModuleElement& v) const;
};

}  // namespace hkit
