#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkit/submodule.hpp"

namespace hkit {

/// Simplicial complex on vertices 1..v given by its facets. Vertex k maps to
/// variable k-1 of the Stanley-Reisner ring.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 16;

  /// Facets are lists of 1-based vertices. Non-maximal faces are dropped;
  /// vertices in no facet are kept as non-faces. An empty facet list
  /// throws; the single facet {} is the complex {∅}.
  SimplicialComplex(int vertices, std::vector<std::vector<int>> facets);

  int vertices() const { return v_; }
  /// Facets as sorted vertex lists, sorted lexicographically.
  std::vector<std::vector<int>> facets() const;
  /// dim = max facet size - 1.
  int dimension() const;
  /// f_i = number of i-dimensional faces, i = 0..dim.
  std::vector<std::int64_t> f_vector() const;
  /// Minimal non-faces as bitmasks (bit k-1 for vertex k).
  std::vector<std::uint32_t> minimal_nonfaces() const;
  bool is_face(std::uint32_t mask) const;

 private:
  int v_;
  std::vector<std::uint32_t> facets_;
};

/// Square-free monomial ideal of minimal non-faces in S = k[x_1..x_v].
IdealData stanley_reisner_ideal(const SimplicialComplex& complex, const Ring& ring);

}  // namespace hkit
