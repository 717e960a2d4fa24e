#include "hkit/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkit {

std::int64_t HilbertData::c(int r) const {
  std::int64_t s = 0;
  if (numerator.is_zero()) return 0;
  for (int i = std::max(r, numerator.low()); i <= numerator.high(); ++i) s = checked_add(s, numerator[i]);
  return s;
}

std::int64_t HilbertData::value(int degree) const {
  if (!dim) return 0;
  const int d = *dim;
  if (d == 0) return numerator[degree];
  std::int64_t v = 0;
  for (int k = numerator.low(); k <= std::min(numerator.high(), degree); ++k)
    v = checked_add(v, checked_mul(numerator[k], binomial(degree - k + d - 1, d - 1)));
  return v;
}

HilbertData hilbert_from_kpoly(LaurentPoly kpoly, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.kpoly = kpoly;
  if (kpoly.is_zero()) return h;
  int cancelled = 0;
  LaurentPoly p = std::move(kpoly);
  while (p.at_one() == 0) {
    p = p.divide_one_minus_t();
    ++cancelled;
  }
  if (cancelled > static_cast<int>(nvars)) throw std::logic_error("K-polynomial has too many factors (1 - t)");
  h.numerator = std::move(p);
  h.dim = static_cast<int>(nvars) - cancelled;
  return h;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

namespace {

LaurentPoly kpoly_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return LaurentPoly::one();

  std::vector<int> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v] > 0) ++count[v];
  std::size_t pivot_var = 0;
  for (std::size_t v = 1; v < nvars; ++v)
    if (count[v] > count[pivot_var]) pivot_var = v;

  if (count[pivot_var] <= 1) {
    // Pairwise coprime generators: the Koszul complex is a resolution.
    LaurentPoly k = LaurentPoly::one();
    for (const auto& g : gens) k = k * (LaurentPoly::one() - LaurentPoly::monomial(g.degree()));
    return k;
  }

  int e = 0;
  for (const auto& g : gens)
    if (g[pivot_var] > 0 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
  Monomial pivot = Monomial::variable(nvars, pivot_var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(colon(g, pivot));

  // K(I) = K(I + (p)) + t^{deg p} K(I : p)
  return kpoly_rec(std::move(with_pivot), nvars) + kpoly_rec(std::move(quotient), nvars).shifted(e);
}

}  // namespace

LaurentPoly kpoly_monomial(std::span<const Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.nvars() != nvars) throw ContextMismatch("monomial has wrong variable count");
  return kpoly_rec(std::vector<Monomial>(generators.begin(), generators.end()), nvars);
}

HilbertData hilbert_monomial(std::span<const Monomial> generators, std::size_t nvars, int twist) {
  return hilbert_from_kpoly(kpoly_monomial(generators, nvars).shifted(twist), nvars);
}

HilbertData hilbert_monomial_module(const std::vector<std::vector<Monomial>>& per_component,
                                    std::span<const int> twists, std::size_t nvars) {
  if (per_component.size() != twists.size()) throw std::invalid_argument("one monomial ideal per component required");
  LaurentPoly k;
  for (std::size_t c = 0; c < twists.size(); ++c)
    k = k + kpoly_monomial(per_component[c], nvars).shifted(twists[c]);
  return hilbert_from_kpoly(std::move(k), nvars);
}

HilbertData hilbert_quotient(const IdealData& ideal) {
  auto init = ideal.initial_ideal();
  return hilbert_monomial(init, ideal.ring()->nvars());
}

HilbertData hilbert_quotient(const SubmoduleData& n) {
  return hilbert_monomial_module(n.initial_module(), n.ambient().twists, n.ring()->nvars());
}

HilbertData hilbert_module(const GradedModulePresentation& p) { return hilbert_quotient(p.relation_module()); }

HilbertData hilbert_submodule(const SubmoduleData& n) {
  const std::size_t nv = n.ring()->nvars();
  LaurentPoly free_k;
  for (int t : n.ambient().twists) free_k = free_k + LaurentPoly::monomial(t);
  HilbertData quotient = hilbert_quotient(n);
  return hilbert_from_kpoly(free_k - quotient.kpoly, nv);
}

DegreeSequence degree_sequence(const IdealData& ideal, int max_degree) {
  const auto n = static_cast<std::int64_t>(ideal.ring()->nvars());
  HilbertData h = hilbert_quotient(ideal);
  DegreeSequence s;
  for (int l = 0; l <= max_degree; ++l) s.s.push_back(binomial(n + l - 1, l) - h.value(l));
  return s;
}

namespace {
std::int64_t alternating_sum(std::int64_t d, const DegreeSequence& s, int l) {
  std::int64_t sum = 0;
  for (int j = 0; j <= l; ++j) {
    std::int64_t term = checked_mul(s.at(l - j), binomial(d, j));
    sum = checked_add(sum, j % 2 ? -term : term);
  }
  return sum;
}
}  // namespace

std::int64_t h_l_formula(std::int64_t e, std::int64_t d, const DegreeSequence& s, int l) {
  if (l < 0) throw std::invalid_argument("h_l_formula: l must be non-negative");
  return binomial(e + l - 1, l) - alternating_sum(d, s, l);
}

InequalityCheck degree_inequality(std::int64_t e, std::int64_t d, const DegreeSequence& s, int l) {
  InequalityCheck c;
  c.lhs = alternating_sum(d, s, l);
  c.rhs = binomial(e + l - 1, l);
  c.holds = c.lhs <= c.rhs;
  return c;
}

std::vector<std::int64_t> f_to_h(std::span<const std::int64_t> f_vector, int d) {
  if (d < 0 || static_cast<int>(f_vector.size()) != d)
    throw std::invalid_argument("f_to_h: f-vector length must equal d");
  auto f = [&](int j) -> std::int64_t { return j == -1 ? 1 : f_vector[j]; };
  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j <= i; ++j) {
      std::int64_t term = checked_mul(binomial(d - j, i - j), f(j - 1));
      s = checked_add(s, (i - j) % 2 ? -term : term);
    }
    h[i] = s;
  }
  return h;
}

int monomial_ideal_height(std::span<const Monomial> generators, std::size_t nvars) {
  auto gens = minimalize_monomials(std::vector<Monomial>(generators.begin(), generators.end()));
  if (gens.empty()) return 0;
  if (nvars > 24) throw std::invalid_argument("monomial_ideal_height: too many variables for cover search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t mask = 0;
    for (auto v : g.support()) mask |= 1u << v;
    if (mask == 0) return static_cast<int>(nvars) + 1;  // unit ideal
    supports.push_back(mask);
  }
  int best = static_cast<int>(nvars);
  for (std::uint32_t cover = 0; cover < (1u << nvars); ++cover) {
    int size = __builtin_popcount(cover);
    if (size >= best) continue;
    bool ok = std::all_of(supports.begin(), supports.end(), [cover](std::uint32_t s) { return (s & cover) != 0; });
    if (ok) best = size;
  }
  return best;
}

}  // namespace hkit
