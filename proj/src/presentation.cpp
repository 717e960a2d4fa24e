#include "hkit/presentation.hpp"

#include <stdexcept>

namespace hkit {

GradedModulePresentation GradedModulePresentation::quotient_ring(const IdealData& ideal, std::string label) {
  return {rank_one(ideal.ring()), ideal.as_submodule().generators(), std::move(label)};
}

GradedModulePresentation GradedModulePresentation::free(const Ring& ring, std::vector<int> twists,
                                                        std::string label) {
  return {FreeModule{ring, std::move(twists)}, {}, std::move(label)};
}

GradedModulePresentation GradedModulePresentation::from_submodule(const SubmoduleData& n, std::string label) {
  return {n.ambient(), n.generators(), std::move(label)};
}

namespace {

// Position of a unit entry: relation index and component.
bool find_unit(const std::vector<ModuleElement>& rels, std::size_t& ri, std::uint32_t& comp) {
  for (ri = 0; ri < rels.size(); ++ri) {
    for (const auto& t : rels[ri].terms()) {
      if (t.mono.is_one()) {
        comp = t.comp;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

GradedModulePresentation prune(const GradedModulePresentation& p) {
  const Field& field = p.ring()->field;
  std::vector<int> twists = p.ambient.twists;
  std::vector<ModuleElement> rels;
  for (const auto& r : p.relations)
    if (!r.is_zero()) rels.push_back(r);

  std::size_t ri;
  std::uint32_t c;
  while (find_unit(rels, ri, c)) {
    ModuleOrder order(p.ring()->order, twists);
    ModuleArith arith(order, field);
    ModuleElement pivot = rels[ri];
    Scalar u;
    for (const auto& t : pivot.terms())
      if (t.comp == c) u = t.coef;
    Scalar inv_u = field.inv(u);

    std::vector<ModuleElement> next;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (k == ri) continue;
      ModuleElement s = rels[k];
      for (;;) {
        const ModTerm* hit = nullptr;
        for (const auto& t : s.terms())
          if (t.comp == c) {
            hit = &t;
            break;
          }
        if (!hit) break;
        Scalar a = field.mul(hit->coef, inv_u);
        Monomial m = hit->mono;
        s = arith.sub_multiple(s, a, m, pivot);
      }
      std::vector<ModTerm> terms = s.terms();
      for (auto& t : terms)
        if (t.comp > c) --t.comp;
      if (!terms.empty()) next.emplace_back(std::move(terms));
    }
    twists.erase(twists.begin() + c);
    ModuleOrder new_order(p.ring()->order, twists);
    ModuleArith new_arith(new_order, field);
    rels.clear();
    for (auto& s : next) rels.push_back(new_arith.normalize(s.terms()));
  }
  return {FreeModule{p.ring(), std::move(twists)}, std::move(rels), p.label};
}

GradedModulePresentation subquotient(const FreeModule& f, std::span<const ModuleElement> z,
                                     std::span<const ModuleElement> b, std::string label) {
  std::vector<ModuleElement> gens;
  std::vector<int> twists;
  for (const auto& v : z) {
    if (v.is_zero()) continue;
    gens.push_back(v);
    twists.push_back(*f.degree(v));
  }
  const std::size_t m = gens.size();
  std::vector<int> gen_twists = twists;
  for (const auto& v : b) {
    if (v.is_zero()) continue;
    gens.push_back(v);
    twists.push_back(*f.degree(v));
  }
  FreeModule ambient{f.ring, gen_twists};
  if (m == 0) return {ambient, {}, std::move(label)};
  auto syz = syzygies(f, gens, twists);
  auto order = ambient.order();
  ModuleArith arith(order, f.ring->field);
  std::vector<ModuleElement> rels;
  for (const auto& s : syz.generators()) {
    std::vector<ModTerm> terms;
    for (const auto& t : s.terms())
      if (t.comp < m) terms.push_back(t);
    if (!terms.empty()) rels.push_back(arith.normalize(std::move(terms)));
  }
  return prune({ambient, std::move(rels), std::move(label)});
}

}  // namespace hkit
