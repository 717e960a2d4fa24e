#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "hkit/groebner.hpp"

namespace hkit {

namespace detail {
struct GroebnerCache {
  std::mutex mutex;
  std::optional<std::vector<ModuleElement>> basis;
  std::optional<std::vector<std::size_t>> minimal;
};
}  // namespace detail

/// Homogeneous submodule of a graded free module, with a lazily computed and
/// then immutable Gröbner basis (shared between copies).
class SubmoduleData {
 public:
  SubmoduleData(FreeModule ambient, std::vector<ModuleElement> generators);

  const FreeModule& ambient() const { return ambient_; }
  const Ring& ring() const { return ambient_.ring; }
  const std::vector<ModuleElement>& generators() const { return generators_; }
  bool is_zero() const;

  const std::vector<ModuleElement>& groebner_basis() const;
  /// A minimal homogeneous generating set (subset of the generators).
  std::vector<ModuleElement> minimal_generators() const;
  /// Lead monomials of the reduced basis, grouped by component.
  std::vector<std::vector<Monomial>> initial_module() const;

  ModuleElement normal_form(const ModuleElement& v) const;
  bool contains(const ModuleElement& v) const;
  bool contains(const SubmoduleData& other) const;

  /// Installs a basis known to be a reduced Gröbner basis of the generators.
  static SubmoduleData with_basis(FreeModule ambient, std::vector<ModuleElement> reduced_basis);

 private:
  FreeModule ambient_;
  std::vector<ModuleElement> generators_;
  std::shared_ptr<detail::GroebnerCache> cache_;
};

/// Homogeneous ideal of S; a rank-one SubmoduleData with polynomial accessors.
class IdealData {
 public:
  /// Throws std::invalid_argument on a non-homogeneous generator and
  /// ContextMismatch on foreign polynomials. Zero generators are dropped.
  IdealData(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  std::vector<Polynomial> groebner_basis() const;
  std::vector<Polynomial> minimal_generators() const;
  /// Lead monomials of the reduced Gröbner basis.
  std::vector<Monomial> initial_ideal() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const IdealData& other) const;

  const SubmoduleData& as_submodule() const { return module_; }
  Polynomial to_polynomial(const ModuleElement& v) const;
  ModuleElement to_element(const Polynomial& f) const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  SubmoduleData module_;
};

FreeModule rank_one(const Ring& ring, int twist = 0);

/// First syzygies of `generators` (elements of `target`). The result lives in
/// the free module whose component j has twist `source_twists[j]`, and its
/// generators form a reduced Gröbner basis of the syzygy module.
SubmoduleData syzygies(const FreeModule& target, std::span<const ModuleElement> generators,
                       std::span<const int> source_twists);
/// Twists taken from the generator degrees (all generators must be nonzero).
SubmoduleData syzygies(const FreeModule& target, std::span<const ModuleElement> generators);
SubmoduleData syzygies(const IdealData& ideal);

/// Kernel of the graded map source -> target whose j-th column is columns[j].
/// Throws std::invalid_argument when a column's degree differs from the
/// source twist.
SubmoduleData kernel_of_map(const FreeModule& source, const FreeModule& target,
                            std::span<const ModuleElement> columns);

/// {v in F : f v in N for every f in `ideal_generators`}.
SubmoduleData module_quotient(const SubmoduleData& n, std::span<const Polynomial> ideal_generators);
/// N : J^infinity, iterating N : J until it stabilizes.
SubmoduleData saturation(const SubmoduleData& n, std::span<const Polynomial> ideal_generators);
/// Generators of N and of a second submodule of the same free module.
SubmoduleData sum(const SubmoduleData& a, const SubmoduleData& b);
bool equal(const SubmoduleData& a, const SubmoduleData& b);

/// A : B. Throws std::invalid_argument when B is the zero ideal.
IdealData ideal_quotient(const IdealData& a, const IdealData& b);

/// The variables x_1..x_n (generators of the irrelevant ideal).
std::vector<Polynomial> irrelevant_ideal(const Ring& ring);

}  // namespace hkit
