#include <doctest.h>

#include <hkit/deficiency.hpp>
#include <hkit/simplicial.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hkit;

namespace {

GradedModulePresentation stanley_reisner(const SimplicialComplex& c, const Field& f = Field::rationals()) {
  Ring r = make_ring(f, static_cast<std::size_t>(c.vertices()));
  return GradedModulePresentation::quotient_ring(stanley_reisner_ideal(c, r));
}

bool connected(int v, const std::vector<std::vector<int>>& edges) {
  std::vector<int> parent(v + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : edges) parent[find(e[0])] = find(e[1]);
  int roots = 0;
  for (int a = 1; a <= v; ++a) roots += find(a) == a;
  return roots == 1;
}

}  // namespace

TEST_CASE("faces and f-vectors") {
  SimplicialComplex bd(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2}});
  CHECK(bd.facets().size() == 4);
  CHECK(bd.dimension() == 2);
  CHECK(bd.f_vector() == std::vector<std::int64_t>{4, 6, 4});
  CHECK(bd.minimal_nonfaces() == std::vector<std::uint32_t>{0b1111});
  CHECK(bd.is_face(0b0111));
  CHECK_FALSE(bd.is_face(0b1111));

  // vertex 3 unused: it becomes a minimal non-face
  SimplicialComplex gap(3, {{1, 2}});
  CHECK(gap.minimal_nonfaces() == std::vector<std::uint32_t>{0b100});

  SimplicialComplex empty(2, {{}});
  CHECK(empty.dimension() == -1);
  CHECK(empty.f_vector().empty());

  CHECK_THROWS(SimplicialComplex(3, {}));
  CHECK_THROWS(SimplicialComplex(3, {{1, 4}}));
  CHECK_THROWS(SimplicialComplex(17, {{1}}));
}

TEST_CASE("Stanley-Reisner ideal of the four-cycle") {
  SimplicialComplex c(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  Ring r = make_ring(Field::rationals(), 4);
  auto I = stanley_reisner_ideal(c, r);
  auto x = [&](int i) { return Polynomial::variable(r, i - 1); };
  CHECK(I.contains(IdealData(r, {x(1) * x(3), x(2) * x(4)})));
  CHECK(IdealData(r, {x(1) * x(3), x(2) * x(4)}).contains(I));
  CHECK_THROWS(stanley_reisner_ideal(c, make_ring(Field::rationals(), 5)));
}

TEST_CASE("graphs are Cohen-Macaulay exactly when connected") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    int v = 3 + trial % 4;
    std::vector<std::vector<int>> edges;
    std::bernoulli_distribution keep(0.45);
    for (int a = 1; a <= v; ++a)
      for (int b = a + 1; b <= v; ++b)
        if (keep(rng)) edges.push_back({a, b});
    // every vertex must be a face; isolated ones become 0-dim facets
    std::vector<bool> seen(v + 1, false);
    for (const auto& e : edges) seen[e[0]] = seen[e[1]] = true;
    auto facets = edges;
    for (int a = 1; a <= v; ++a)
      if (!seen[a]) facets.push_back({a});
    if (edges.empty() || facets.size() != edges.size()) continue;  // pure 1-dim only
    SimplicialComplex c(v, facets);
    auto prof = deficiency_profile(stanley_reisner(c), {.regularity = false});
    CHECK((prof.depth == prof.dim) == connected(v, edges));
  }
}

TEST_CASE("combinatorial and algebraic h-vectors agree") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    int v = 4 + trial % 4;
    std::uniform_int_distribution<int> vertex(1, v), size(1, 4);
    std::vector<std::vector<int>> facets;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> f;
      int s = size(rng);
      for (int j = 0; j < s; ++j) f.push_back(vertex(rng));
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      facets.push_back(f);
    }
    SimplicialComplex c(v, facets);
    auto h = hilbert_module(stanley_reisner(c));
    int d = c.dimension() + 1;
    CHECK(h.dim == d);
    auto comb = f_to_h(c.f_vector(), d);
    for (int i = 0; i <= d; ++i) CHECK(comb[i] == h.h(i));
  }
}

TEST_CASE("simplicial spheres satisfy Dehn-Sommerville") {
  // octahedron boundary
  SimplicialComplex oct(6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
  auto h = hilbert_module(stanley_reisner(oct));
  CHECK(h.h_vector() == std::vector<std::int64_t>{1, 3, 3, 1});
  auto prof = deficiency_profile(stanley_reisner(oct));
  CHECK(prof.depth == 3);
}
