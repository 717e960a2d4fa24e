#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hkit/laurent.hpp"
#include "hkit/presentation.hpp"

namespace hkit {

/// Hilbert series data of a graded module M over S = k[x_1..x_n]:
///   H_M(t) = kpoly(t) / (1-t)^n = numerator(t) / (1-t)^dim.
/// The h-vector is the coefficient list of the numerator; it may start at a
/// negative index for twisted modules (see h_offset()).
struct HilbertData {
  std::size_t nvars = 0;
  LaurentPoly kpoly;
  LaurentPoly numerator;
  /// Krull dimension (pole order at t = 1); empty for the zero module.
  std::optional<int> dim;

  bool is_zero() const { return numerator.is_zero(); }
  int h_offset() const { return numerator.is_zero() ? 0 : numerator.low(); }
  std::vector<std::int64_t> h_vector() const { return numerator.coefficients(); }
  std::int64_t h(int i) const { return numerator[i]; }
  /// e(M) = p_M(1).
  std::int64_t multiplicity() const { return numerator.at_one(); }
  /// c_r(M) = e(M) - sum_{i<r} h_i(M) = h_r + h_{r+1} + ...
  std::int64_t c(int r) const;
  /// dim_k M_j.
  std::int64_t value(int degree) const;
};

/// Normalizes a K-polynomial (numerator over (1-t)^nvars).
HilbertData hilbert_from_kpoly(LaurentPoly kpoly, std::size_t nvars);

/// K-polynomial of S/J for a monomial ideal J (Bigatti pivot recursion,
/// pivot on the variable occurring in the most generators).
LaurentPoly kpoly_monomial(std::span<const Monomial> generators, std::size_t nvars);

/// Hilbert data of S(-twist)/J.
HilbertData hilbert_monomial(std::span<const Monomial> generators, std::size_t nvars, int twist = 0);
/// Hilbert data of ⊕_c S(-twist_c)/J_c, i.e. of F/N for a monomial submodule.
HilbertData hilbert_monomial_module(const std::vector<std::vector<Monomial>>& per_component,
                                    std::span<const int> twists, std::size_t nvars);

/// S/I via the initial ideal.
HilbertData hilbert_quotient(const IdealData& ideal);
/// F/N via the initial module of N.
HilbertData hilbert_quotient(const SubmoduleData& n);
HilbertData hilbert_module(const GradedModulePresentation& p);
/// Hilbert data of the submodule N itself (as a graded module).
HilbertData hilbert_submodule(const SubmoduleData& n);

/// s_l = dim_k I_l for l = 0..max_degree.
struct DegreeSequence {
  std::vector<std::int64_t> s;
  std::int64_t at(int l) const { return l >= 0 && l < static_cast<int>(s.size()) ? s[l] : 0; }
};
DegreeSequence degree_sequence(const IdealData& ideal, int max_degree);

/// h_l = C(e+l-1, l) - sum_{j=0}^{l} (-1)^j s_{l-j} C(d, j).
std::int64_t h_l_formula(std::int64_t e, std::int64_t d, const DegreeSequence& s, int l);

struct InequalityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};
/// sum_{j=0}^{l} (-1)^j s_{l-j} C(d, j)  <=  C(e+l-1, l)
InequalityCheck degree_inequality(std::int64_t e, std::int64_t d, const DegreeSequence& s, int l);

/// h_i = sum_{j=0}^{i} (-1)^{i-j} C(d-j, i-j) f_{j-1} with f_{-1} = 1, for
/// f = (f_0, ..., f_{d-1}). Throws std::invalid_argument if f.size() != d.
std::vector<std::int64_t> f_to_h(std::span<const std::int64_t> f_vector, int d);

/// Height of a monomial ideal: minimum vertex cover of the support hypergraph.
int monomial_ideal_height(std::span<const Monomial> generators, std::size_t nvars);

/// Drops generators divisible by another one; result sorted by degree.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> generators);

}  // namespace hkit
