#include "hkit/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkit {

SimplicialComplex::SimplicialComplex(int vertices, std::vector<std::vector<int>> facets) : v_(vertices) {
  if (vertices < 1 || vertices > kMaxVertices)
    throw std::invalid_argument("simplicial complex needs between 1 and 16 vertices");
  if (facets.empty()) throw std::invalid_argument("simplicial complex needs at least one facet");
  std::vector<std::uint32_t> masks;
  for (const auto& f : facets) {
    std::uint32_t m = 0;
    for (int k : f) {
      if (k < 1 || k > vertices) throw std::invalid_argument("facet vertex " + std::to_string(k) + " out of range");
      m |= 1u << (k - 1);
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (auto m : masks) {
    bool dominated = std::any_of(masks.begin(), masks.end(), [m](std::uint32_t o) { return o != m && (m & o) == m; });
    if (!dominated) facets_.push_back(m);
  }
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (auto m : facets_) {
    std::vector<int> f;
    for (int k = 0; k < v_; ++k)
      if (m >> k & 1u) f.push_back(k + 1);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (auto m : facets_) best = std::max(best, __builtin_popcount(m));
  return best - 1;
}

bool SimplicialComplex::is_face(std::uint32_t mask) const {
  return std::any_of(facets_.begin(), facets_.end(), [mask](std::uint32_t f) { return (mask & f) == mask; });
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (std::uint32_t m = 1; m < (1u << v_); ++m)
    if (is_face(m)) ++f[__builtin_popcount(m) - 1];
  return f;
}

std::vector<std::uint32_t> SimplicialComplex::minimal_nonfaces() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < (1u << v_); ++m) {
    if (is_face(m)) continue;
    bool minimal = true;
    for (int k = 0; k < v_ && minimal; ++k)
      if ((m >> k & 1u) && !is_face(m & ~(1u << k))) minimal = false;
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

IdealData stanley_reisner_ideal(const SimplicialComplex& complex, const Ring& ring) {
  if (static_cast<int>(ring->nvars()) != complex.vertices())
    throw ContextMismatch("ring must have one variable per vertex");
  std::vector<Polynomial> gens;
  for (auto m : complex.minimal_nonfaces()) {
    Monomial mono(ring->nvars());
    for (int k = 0; k < complex.vertices(); ++k)
      if (m >> k & 1u) mono.set(static_cast<std::size_t>(k), 1);
    gens.push_back(Polynomial::monomial(ring, mono));
  }
  return IdealData(ring, std::move(gens));
}

}  // namespace hkit
