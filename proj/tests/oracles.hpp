#pragma once

// Independent brute-force checks shared by the test binaries. Nothing here
// goes through Gröbner bases: Hilbert functions come from ranks of explicit
// coefficient matrices.

#include <hkit/presentation.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using hkit::Field;
using hkit::Scalar;

// All exponent vectors of total degree `deg` in n variables.
inline std::vector<std::vector<int>> monomials_of_degree(std::size_t n, int deg) {
  std::vector<std::vector<int>> out;
  if (deg < 0) return out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

// Rank of a sparse row set over the field, plain Gaussian elimination.
template <class Key>
std::int64_t rank(const Field& f, std::vector<std::map<Key, Scalar>> rows) {
  std::int64_t r = 0;
  std::vector<std::map<Key, Scalar>> pivots;
  for (auto& row : rows) {
    for (const auto& p : pivots) {
      auto lead = p.begin()->first;
      auto it = row.find(lead);
      if (it == row.end()) continue;
      Scalar c = f.div(it->second, p.begin()->second);
      for (const auto& [k, v] : p) {
        Scalar nv = f.sub(row[k], f.mul(c, v));
        if (Field::is_zero(nv)) row.erase(k);
        else row[k] = nv;
      }
    }
    if (row.empty()) continue;
    // keep pivots keyed by their smallest key so later rows eliminate it
    pivots.push_back(std::move(row));
    ++r;
  }
  return r;
}

using ModKey = std::pair<std::uint32_t, std::vector<int>>;

// dim_k (F/N)_j for N generated by `relations`, straight from the definition.
inline std::int64_t hilbert_function(const hkit::GradedModulePresentation& m, int j) {
  const auto& ring = m.ring();
  const std::size_t n = ring->nvars();
  std::int64_t ambient = 0;
  for (int a : m.ambient.twists) ambient += static_cast<std::int64_t>(monomials_of_degree(n, j - a).size());
  std::vector<std::map<ModKey, Scalar>> rows;
  for (const auto& rel : m.relations) {
    auto d = m.ambient.degree(rel);
    if (!d) continue;
    for (const auto& e : monomials_of_degree(n, j - *d)) {
      std::map<ModKey, Scalar> row;
      hkit::Monomial mult{std::span<const int>(e)};
      for (const auto& t : rel.terms()) {
        auto prod = mult * t.mono;
        row[{t.comp, prod.exponents()}] = t.coef;
      }
      rows.push_back(std::move(row));
    }
  }
  return ambient - rank(ring->field, std::move(rows));
}

inline std::int64_t hilbert_function(const hkit::IdealData& ideal, int j) {
  return hilbert_function(hkit::GradedModulePresentation::quotient_ring(ideal), j);
}

// Random homogeneous polynomial of degree `deg` with `terms` terms and small
// nonzero coefficients.
inline hkit::Polynomial random_form(const hkit::Ring& ring, int deg, int terms, std::mt19937_64& rng) {
  auto mons = monomials_of_degree(ring->nvars(), deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<hkit::PolyTerm> t;
  for (int k = 0; k < terms; ++k) {
    int c = 0;
    while (c == 0) c = coef(rng);
    t.push_back({hkit::Monomial(std::span<const int>(mons[pick(rng)])), ring->field.from_int(c)});
  }
  return hkit::Polynomial(ring, std::move(t));
}

inline hkit::Monomial random_monomial(std::size_t n, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  auto mons = monomials_of_degree(n, deg(rng));
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  return hkit::Monomial(std::span<const int>(mons[pick(rng)]));
}

inline hkit::IdealData random_monomial_ideal(const hkit::Ring& ring, int count, int max_deg, std::mt19937_64& rng) {
  std::vector<hkit::Polynomial> g;
  for (int k = 0; k < count; ++k)
    g.push_back(hkit::Polynomial::monomial(ring, random_monomial(ring->nvars(), max_deg, rng)));
  return hkit::IdealData(ring, std::move(g));
}

}  // namespace oracle
