#include "hkit/submodule.hpp"

#include <stdexcept>

namespace hkit {

SubmoduleData::SubmoduleData(FreeModule ambient, std::vector<ModuleElement> generators)
    : ambient_(std::move(ambient)), cache_(std::make_shared<detail::GroebnerCache>()) {
  for (auto& g : generators) {
    ambient_.validate(g);
    if (g.is_zero()) continue;
    if (!ambient_.is_homogeneous(g)) throw std::invalid_argument("submodule generator is not homogeneous");
    generators_.push_back(std::move(g));
  }
}

SubmoduleData SubmoduleData::with_basis(FreeModule ambient, std::vector<ModuleElement> reduced_basis) {
  SubmoduleData s(std::move(ambient), reduced_basis);
  s.cache_->basis = std::move(reduced_basis);
  return s;
}

bool SubmoduleData::is_zero() const { return generators_.empty(); }

const std::vector<ModuleElement>& SubmoduleData::groebner_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) {
    auto order = ambient_.order();
    auto res = hkit::groebner_basis(order, ambient_.ring->field, generators_);
    cache_->basis = std::move(res.basis);
    cache_->minimal = std::move(res.minimal_generators);
  }
  return *cache_->basis;
}

std::vector<ModuleElement> SubmoduleData::minimal_generators() const {
  std::vector<std::size_t> idx;
  {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->minimal) {
      auto order = ambient_.order();
      auto res = hkit::groebner_basis(order, ambient_.ring->field, generators_);
      if (!cache_->basis) cache_->basis = std::move(res.basis);
      cache_->minimal = std::move(res.minimal_generators);
    }
    idx = *cache_->minimal;
  }
  std::vector<ModuleElement> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(generators_[i]);
  return out;
}

std::vector<std::vector<Monomial>> SubmoduleData::initial_module() const {
  std::vector<std::vector<Monomial>> out(ambient_.rank());
  for (const auto& g : groebner_basis()) out[g.lead().comp].push_back(g.lead().mono);
  return out;
}

ModuleElement SubmoduleData::normal_form(const ModuleElement& v) const {
  ambient_.validate(v);
  auto order = ambient_.order();
  return hkit::normal_form(ModuleArith(order, ambient_.ring->field), v, groebner_basis());
}

bool SubmoduleData::contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }

bool SubmoduleData::contains(const SubmoduleData& other) const {
  require_same_ring(ambient_.ring, other.ambient_.ring);
  if (other.ambient_.twists != ambient_.twists) throw ContextMismatch("submodules of different free modules");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

IdealData::IdealData(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), module_(rank_one(ring_), {}) {
  std::vector<ModuleElement> elems;
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator is not homogeneous: " + g.to_string());
    elems.push_back(to_element(g));
    generators_.push_back(std::move(g));
  }
  module_ = SubmoduleData(rank_one(ring_), std::move(elems));
}

Polynomial IdealData::to_polynomial(const ModuleElement& v) const {
  std::vector<PolyTerm> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) terms.push_back({t.mono, t.coef});
  return Polynomial(ring_, std::move(terms));
}

ModuleElement IdealData::to_element(const Polynomial& f) const {
  std::vector<ModTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, 0, t.coef});
  auto order = rank_one(ring_).order();
  return ModuleArith(order, ring_->field).normalize(std::move(terms));
}

std::vector<Polynomial> IdealData::groebner_basis() const {
  std::vector<Polynomial> out;
  for (const auto& g : module_.groebner_basis()) out.push_back(to_polynomial(g));
  return out;
}

std::vector<Polynomial> IdealData::minimal_generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : module_.minimal_generators()) out.push_back(to_polynomial(g));
  return out;
}

std::vector<Monomial> IdealData::initial_ideal() const {
  std::vector<Monomial> out;
  for (const auto& g : module_.groebner_basis()) out.push_back(g.lead().mono);
  return out;
}

Polynomial IdealData::normal_form(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  return to_polynomial(module_.normal_form(to_element(f)));
}

bool IdealData::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool IdealData::contains(const IdealData& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

FreeModule rank_one(const Ring& ring, int twist) { return FreeModule{ring, {twist}}; }

SubmoduleData syzygies(const FreeModule& target, std::span<const ModuleElement> generators,
                       std::span<const int> source_twists) {
  if (generators.size() != source_twists.size())
    throw std::invalid_argument("syzygies: one twist per generator required");
  const std::size_t r = target.rank();
  const std::size_t k = generators.size();
  std::vector<int> twists = target.twists;
  twists.insert(twists.end(), source_twists.begin(), source_twists.end());
  ModuleOrder order(target.ring->order, twists, r);
  ModuleArith arith(order, target.ring->field);

  std::vector<ModuleElement> augmented;
  augmented.reserve(k);
  const std::size_t n = target.ring->nvars();
  for (std::size_t j = 0; j < k; ++j) {
    target.validate(generators[j]);
    auto d = target.degree(generators[j]);
    if (d && *d != source_twists[j])
      throw std::invalid_argument("syzygies: generator degree does not match its twist");
    std::vector<ModTerm> terms = generators[j].terms();
    terms.push_back({Monomial(n), static_cast<std::uint32_t>(r + j), Scalar(1)});
    augmented.push_back(arith.normalize(std::move(terms)));
  }
  auto gb = groebner_basis(order, target.ring->field, augmented);

  std::vector<ModuleElement> syz;
  for (auto& g : gb.basis) {
    if (g.lead().comp < r) continue;
    std::vector<ModTerm> terms = g.terms();
    for (auto& t : terms) t.comp -= static_cast<std::uint32_t>(r);
    syz.emplace_back(std::move(terms));
  }
  FreeModule source{target.ring, std::vector<int>(source_twists.begin(), source_twists.end())};
  return SubmoduleData::with_basis(std::move(source), std::move(syz));
}

SubmoduleData syzygies(const FreeModule& target, std::span<const ModuleElement> generators) {
  std::vector<int> twists;
  for (const auto& g : generators) {
    auto d = target.degree(g);
    if (!d) throw std::invalid_argument("syzygies: zero generator needs an explicit twist");
    twists.push_back(*d);
  }
  return syzygies(target, generators, twists);
}

SubmoduleData syzygies(const IdealData& ideal) {
  return syzygies(ideal.as_submodule().ambient(), ideal.as_submodule().generators());
}

SubmoduleData kernel_of_map(const FreeModule& source, const FreeModule& target,
                            std::span<const ModuleElement> columns) {
  require_same_ring(source.ring, target.ring);
  if (columns.size() != source.rank()) throw std::invalid_argument("kernel_of_map: column count != source rank");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    target.validate(columns[j]);
    if (!target.is_homogeneous(columns[j])) throw std::invalid_argument("kernel_of_map: column is not homogeneous");
    auto d = target.degree(columns[j]);
    if (d && *d != source.twists[j]) throw std::invalid_argument("kernel_of_map: map is not graded");
  }
  return syzygies(target, columns, source.twists);
}

SubmoduleData module_quotient(const SubmoduleData& n, std::span<const Polynomial> ideal_generators) {
  const FreeModule& f = n.ambient();
  std::vector<Polynomial> fs;
  for (const auto& g : ideal_generators) {
    require_same_ring(f.ring, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("module_quotient: ideal generator is not homogeneous");
    fs.push_back(g);
  }
  const std::size_t r = f.rank(), m = fs.size();
  if (m == 0) {
    std::vector<ModuleElement> all;
    for (std::size_t c = 0; c < r; ++c) all.push_back(f.basis(c));
    return SubmoduleData(f, std::move(all));
  }
  // Target: m copies of F, copy k shifted so that v -> f_k v keeps degree.
  std::vector<int> twists;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t c = 0; c < r; ++c) twists.push_back(f.twists[c] - fs[k].lead().mono.degree());
  FreeModule target{f.ring, twists};
  auto order = target.order();
  ModuleArith arith(order, f.ring->field);

  auto embed = [&](const ModuleElement& v, std::size_t k, const Polynomial* mult) {
    std::vector<ModTerm> terms;
    if (mult) {
      for (const auto& pt : mult->terms())
        for (const auto& t : v.terms())
          terms.push_back({t.mono * pt.mono, static_cast<std::uint32_t>(k * r + t.comp),
                           f.ring->field.mul(t.coef, pt.coef)});
    } else {
      for (const auto& t : v.terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(k * r + t.comp), t.coef});
    }
    return arith.normalize(std::move(terms));
  };

  std::vector<ModuleElement> columns;
  std::vector<int> source_twists;
  for (std::size_t c = 0; c < r; ++c) {
    ModuleElement col;
    for (std::size_t k = 0; k < m; ++k) col = arith.add(col, embed(f.basis(c), k, &fs[k]));
    columns.push_back(std::move(col));
    source_twists.push_back(f.twists[c]);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (const auto& g : n.generators()) {
      columns.push_back(embed(g, k, nullptr));
      source_twists.push_back(*f.degree(g) - fs[k].lead().mono.degree());
    }
  }
  auto syz = syzygies(target, columns, source_twists);
  std::vector<ModuleElement> quotient;
  for (const auto& s : syz.generators()) {
    std::vector<ModTerm> terms;
    for (const auto& t : s.terms())
      if (t.comp < r) terms.push_back(t);
    if (!terms.empty()) quotient.emplace_back(std::move(terms));
  }
  // Projection keeps the order (the first r components restrict the source order).
  return SubmoduleData(f, std::move(quotient));
}

SubmoduleData saturation(const SubmoduleData& n, std::span<const Polynomial> ideal_generators) {
  SubmoduleData current = n;
  for (;;) {
    SubmoduleData next = module_quotient(current, ideal_generators);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

SubmoduleData sum(const SubmoduleData& a, const SubmoduleData& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.ambient().twists != b.ambient().twists) throw ContextMismatch("sum of submodules of different free modules");
  std::vector<ModuleElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return SubmoduleData(a.ambient(), std::move(gens));
}

bool equal(const SubmoduleData& a, const SubmoduleData& b) { return a.contains(b) && b.contains(a); }

IdealData ideal_quotient(const IdealData& a, const IdealData& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::invalid_argument("ideal_quotient: divisor ideal is zero");
  auto q = module_quotient(a.as_submodule(), b.generators());
  std::vector<Polynomial> gens;
  for (const auto& g : q.minimal_generators()) gens.push_back(a.to_polynomial(g));
  return IdealData(a.ring(), std::move(gens));
}

std::vector<Polynomial> irrelevant_ideal(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return vars;
}

}  // namespace hkit
