#include "hkit/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <tuple>

namespace hkit {

namespace {

std::atomic<int> g_degree_cap{40};

// Lead-term index: for each component, the basis elements whose lead sits there.
class LeadIndex {
 public:
  void add(std::uint32_t comp, std::size_t idx) {
    if (comp >= by_comp_.size()) by_comp_.resize(comp + 1);
    by_comp_[comp].push_back(idx);
  }
  const std::vector<std::size_t>& in(std::uint32_t comp) const {
    static const std::vector<std::size_t> empty;
    return comp < by_comp_.size() ? by_comp_[comp] : empty;
  }

 private:
  std::vector<std::vector<std::size_t>> by_comp_;
};

ModuleElement reduce_full(const ModuleArith& arith, ModuleElement f,
                          const std::vector<ModuleElement>& basis, const LeadIndex& index,
                          std::size_t skip = static_cast<std::size_t>(-1)) {
  const Field& field = arith.field();
  std::size_t pos = 0;
  while (pos < f.size()) {
    const ModTerm& t = f.terms()[pos];
    const ModuleElement* reducer = nullptr;
    for (std::size_t k : index.in(t.comp)) {
      if (k == skip) continue;
      if (basis[k].lead().mono.divides(t.mono)) {
        reducer = &basis[k];
        break;
      }
    }
    if (!reducer) {
      ++pos;
      continue;
    }
    Scalar c = field.div(t.coef, reducer->lead().coef);
    Monomial m = t.mono / reducer->lead().mono;
    f = arith.sub_multiple(f, c, m, *reducer);
  }
  return f;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::runtime_error("Groebner computation reached degree " + std::to_string(degree) +
                         " beyond the degree cap " + std::to_string(cap)),
      degree_(degree),
      cap_(cap) {}

int default_degree_cap() { return g_degree_cap.load(); }
void set_default_degree_cap(int cap) { g_degree_cap.store(cap); }

ModuleElement s_vector(const ModuleArith& arith, const ModuleElement& a, const ModuleElement& b) {
  const auto& la = a.lead();
  const auto& lb = b.lead();
  if (la.comp != lb.comp) throw std::invalid_argument("S-vector of elements with different lead components");
  Monomial l = lcm(la.mono, lb.mono);
  const Field& field = arith.field();
  ModuleElement sa = arith.times(a, l / la.mono, field.inv(la.coef));
  return arith.sub_multiple(sa, field.inv(lb.coef), l / lb.mono, b);
}

ModuleElement normal_form(const ModuleArith& arith, const ModuleElement& f,
                          std::span<const ModuleElement> basis) {
  std::vector<ModuleElement> gb;
  LeadIndex index;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    index.add(g.lead().comp, gb.size());
    gb.push_back(g);
  }
  return reduce_full(arith, f, gb, index);
}

bool is_groebner_basis(const ModuleArith& arith, std::span<const ModuleElement> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (basis[i].lead().comp != basis[j].lead().comp) continue;
      if (!normal_form(arith, s_vector(arith, basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

GroebnerResult groebner_basis(const ModuleOrder& order, const Field& field,
                              std::span<const ModuleElement> generators,
                              const GroebnerOptions& options) {
  ModuleArith arith(order, field);
  GroebnerResult result;
  const bool product_criterion = order.rank() == 1;

  // Pending input generators, bucketed by degree.
  std::map<int, std::vector<std::size_t>> pending_gens;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& v = generators[g];
    if (v.is_zero()) continue;
    for (const auto& t : v.terms())
      if (t.comp >= order.rank()) throw std::invalid_argument("generator component out of range");
    if (!arith.is_homogeneous(v)) throw std::invalid_argument("Groebner input must be homogeneous");
    pending_gens[order.degree(v.lead())].push_back(g);
  }

  std::vector<ModuleElement> basis;
  LeadIndex index;
  std::map<int, std::vector<Pair>> pairs;
  auto element_degree = [&](std::size_t k) { return order.degree(basis[k].lead()); };

  auto insert = [&](ModuleElement h) {
    h = arith.monic(h);
    std::size_t k = basis.size();
    const auto& lead = h.lead();
    for (std::size_t i : index.in(lead.comp)) {
      Monomial l = lcm(basis[i].lead().mono, lead.mono);
      ++result.stats.pairs_created;
      if (product_criterion && basis[i].lead().mono.coprime(lead.mono)) {
        ++result.stats.pairs_skipped;
        continue;
      }
      int deg = l.degree() + order.twists()[lead.comp];
      pairs[deg].push_back({i, k, std::move(l)});
    }
    index.add(lead.comp, k);
    basis.push_back(std::move(h));
  };

  auto chain_skip = [&](const Pair& p) {
    std::uint32_t comp = basis[p.i].lead().comp;
    for (std::size_t k : index.in(comp)) {
      if (k == p.i || k == p.j) continue;
      const Monomial& lk = basis[k].lead().mono;
      if (!lk.divides(p.lcm)) continue;
      if (lcm(basis[p.i].lead().mono, lk) == p.lcm) continue;
      if (lcm(basis[p.j].lead().mono, lk) == p.lcm) continue;
      return true;
    }
    return false;
  };

  while (!pairs.empty() || !pending_gens.empty()) {
    int deg = pairs.empty() ? pending_gens.begin()->first
              : pending_gens.empty() ? pairs.begin()->first
                                     : std::min(pairs.begin()->first, pending_gens.begin()->first);
    if (deg > options.degree_cap) throw DegreeCapExceeded(deg, options.degree_cap);

    if (auto it = pairs.find(deg); it != pairs.end()) {
      std::vector<Pair> batch = std::move(it->second);
      pairs.erase(it);
      std::stable_sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      for (const auto& p : batch) {
        if (chain_skip(p)) {
          ++result.stats.pairs_skipped;
          continue;
        }
        ModuleElement s = s_vector(arith, basis[p.i], basis[p.j]);
        ModuleElement r = reduce_full(arith, std::move(s), basis, index);
        if (r.is_zero()) {
          ++result.stats.reductions_to_zero;
          continue;
        }
        insert(std::move(r));
      }
    }
    if (auto it = pending_gens.find(deg); it != pending_gens.end()) {
      std::vector<std::size_t> batch = std::move(it->second);
      pending_gens.erase(it);
      for (std::size_t g : batch) {
        ModuleElement r = reduce_full(arith, generators[g], basis, index);
        if (r.is_zero()) continue;
        result.minimal_generators.push_back(g);
        insert(std::move(r));
      }
    }
  }

  // Leads are pairwise non-dividing by construction; tail-reduce for the reduced basis.
  std::vector<ModuleElement> reduced;
  reduced.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    ModuleElement head({basis[k].lead()});
    ModuleElement tail(std::vector<ModTerm>(basis[k].terms().begin() + 1, basis[k].terms().end()));
    tail = reduce_full(arith, std::move(tail), basis, index, k);
    std::vector<ModTerm> terms = head.terms();
    terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
    reduced.emplace_back(std::move(terms));
  }
  (void)element_degree;
  std::sort(reduced.begin(), reduced.end(), [&order](const ModuleElement& a, const ModuleElement& b) {
    return order.compare(a.lead(), b.lead()) < 0;
  });
  result.basis = std::move(reduced);
  std::sort(result.minimal_generators.begin(), result.minimal_generators.end());
  return result;
}

}  // namespace hkit
