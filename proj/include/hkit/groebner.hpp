#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hkit/free_module.hpp"

namespace hkit {

/// Raised when a computation would need Gröbner elements above the degree cap.
class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(int degree, int cap);
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Process-wide default for GroebnerOptions::degree_cap (initially 40).
int default_degree_cap();
void set_default_degree_cap(int cap);

struct GroebnerOptions {
  int degree_cap = default_degree_cap();
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

struct GroebnerResult {
  /// Reduced Gröbner basis, monic, sorted by ascending lead term.
  std::vector<ModuleElement> basis;
  /// Indices of input generators forming a minimal homogeneous generating set.
  std::vector<std::size_t> minimal_generators;
  GroebnerStats stats;
};

/// Buchberger's algorithm for homogeneous submodules of a free module with the
/// given order. Pairs are processed by ascending lcm degree (normal strategy),
/// ties by pair creation index. The chain criterion is always applied; the
/// coprime-lead criterion only when the ambient rank is 1.
GroebnerResult groebner_basis(const ModuleOrder& order, const Field& field,
                              std::span<const ModuleElement> generators,
                              const GroebnerOptions& options = {});

/// Full normal form of f modulo the elements of `basis` (any set; the result is
/// canonical only when `basis` is a Gröbner basis).
ModuleElement normal_form(const ModuleArith& arith, const ModuleElement& f,
                          std::span<const ModuleElement> basis);

/// Checks Buchberger's criterion directly: every S-vector between elements
/// with the same lead component reduces to 0.
bool is_groebner_basis(const ModuleArith& arith, std::span<const ModuleElement> basis);

/// S-vector of two elements with equal lead component.
ModuleElement s_vector(const ModuleArith& arith, const ModuleElement& a, const ModuleElement& b);

}  // namespace hkit
