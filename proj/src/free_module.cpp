#include "hkit/free_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkit {

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto &s = a.terms_[i], &t = b.terms_[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || s.coef != t.coef) return false;
  }
  return true;
}

ModuleElement ModuleArith::normalize(std::vector<ModTerm> terms) const {
  for (auto& t : terms) t.coef = field_.from_rational(t.coef);
  std::stable_sort(terms.begin(), terms.end(),
                   [this](const ModTerm& a, const ModTerm& b) { return order_.compare(a, b) > 0; });
  std::vector<ModTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = field_.add(out.back().coef, t.coef);
      if (Field::is_zero(out.back().coef)) out.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      out.push_back(std::move(t));
    }
  }
  return ModuleElement(std::move(out));
}

ModuleElement ModuleArith::add(const ModuleElement& a, const ModuleElement& b) const {
  return sub_multiple(a, field_.from_int(-1), Monomial(b.is_zero() ? 0 : b.lead().mono.nvars()), b);
}

ModuleElement ModuleArith::sub(const ModuleElement& a, const ModuleElement& b) const {
  return sub_multiple(a, field_.from_int(1), Monomial(b.is_zero() ? 0 : b.lead().mono.nvars()), b);
}

ModuleElement ModuleArith::sub_multiple(const ModuleElement& a, const Scalar& c, const Monomial& m,
                                        const ModuleElement& b) const {
  if (b.is_zero() || Field::is_zero(c)) return a;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::vector<ModTerm> out;
  out.reserve(at.size() + bt.size());
  const Scalar negc = field_.neg(c);
  std::size_t i = 0, j = 0;
  // Multiplying b by m preserves its term order, so a single merge suffices.
  Monomial bm;
  bool have_bm = false;
  while (i < at.size() || j < bt.size()) {
    if (j < bt.size() && !have_bm) {
      bm = bt[j].mono * m;
      have_bm = true;
    }
    int cmp = i == at.size() ? -1 : j == bt.size() ? 1 : order_.compare(at[i].mono, at[i].comp, bm, bt[j].comp);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), bt[j].comp, field_.mul(negc, bt[j].coef)});
      ++j;
      have_bm = false;
    } else {
      Scalar s = field_.sub(at[i].coef, field_.mul(c, bt[j].coef));
      if (!Field::is_zero(s)) out.push_back({at[i].mono, at[i].comp, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return ModuleElement(std::move(out));
}

ModuleElement ModuleArith::scale(const ModuleElement& a, const Scalar& c) const {
  if (Field::is_zero(c)) return {};
  std::vector<ModTerm> out = a.terms();
  for (auto& t : out) t.coef = field_.mul(t.coef, c);
  return ModuleElement(std::move(out));
}

ModuleElement ModuleArith::times(const ModuleElement& a, const Monomial& m, const Scalar& c) const {
  if (Field::is_zero(c)) return {};
  std::vector<ModTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.mono * m, t.comp, field_.mul(t.coef, c)});
  return ModuleElement(std::move(out));
}

ModuleElement ModuleArith::times(const ModuleElement& a, const Polynomial& f) const {
  ModuleElement r;
  for (const auto& t : f.terms()) r = sub_multiple(r, field_.neg(t.coef), t.mono, a);
  return r;
}

ModuleElement ModuleArith::monic(const ModuleElement& a) const {
  if (a.is_zero() || Field::is_one(a.lead().coef)) return a;
  return scale(a, field_.inv(a.lead().coef));
}

std::optional<int> ModuleArith::degree(const ModuleElement& a) const {
  if (a.is_zero()) return std::nullopt;
  return order_.degree(a.lead());
}

bool ModuleArith::is_homogeneous(const ModuleElement& a) const {
  if (a.is_zero()) return true;
  int d = order_.degree(a.lead());
  for (const auto& t : a.terms())
    if (order_.degree(t) != d) return false;
  return true;
}

ModuleElement FreeModule::basis(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("basis index");
  return ModuleElement({{Monomial(ring->nvars()), static_cast<std::uint32_t>(i), Scalar(1)}});
}

ModuleElement FreeModule::from_polys(const std::vector<Polynomial>& entries) const {
  if (entries.size() != rank()) throw std::invalid_argument("entry count does not match module rank");
  std::vector<ModTerm> terms;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    require_same_ring(ring, entries[c].ring());
    for (const auto& t : entries[c].terms())
      terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coef});
  }
  auto ord = order();
  return ModuleArith(ord, ring->field).normalize(std::move(terms));
}

Polynomial FreeModule::component(const ModuleElement& v, std::size_t comp) const {
  std::vector<PolyTerm> terms;
  for (const auto& t : v.terms())
    if (t.comp == comp) terms.push_back({t.mono, t.coef});
  return Polynomial(ring, std::move(terms));
}

ModuleElement FreeModule::times(const ModuleElement& v, const Polynomial& f) const {
  require_same_ring(ring, f.ring());
  auto ord = order();
  return ModuleArith(ord, ring->field).times(v, f);
}

ModuleElement FreeModule::add(const ModuleElement& a, const ModuleElement& b) const {
  auto ord = order();
  return ModuleArith(ord, ring->field).add(a, b);
}

ModuleElement FreeModule::sub(const ModuleElement& a, const ModuleElement& b) const {
  auto ord = order();
  return ModuleArith(ord, ring->field).sub(a, b);
}

std::optional<int> FreeModule::degree(const ModuleElement& v) const {
  if (v.is_zero()) return std::nullopt;
  return v.lead().mono.degree() + twists[v.lead().comp];
}

bool FreeModule::is_homogeneous(const ModuleElement& v) const {
  auto ord = order();
  return ModuleArith(ord, ring->field).is_homogeneous(v);
}

void FreeModule::validate(const ModuleElement& v) const {
  for (const auto& t : v.terms()) {
    if (t.comp >= rank()) throw std::invalid_argument("module element component out of range");
    if (t.mono.nvars() != ring->nvars()) throw ContextMismatch("module element has wrong variable count");
  }
}

std::string FreeModule::to_string(const ModuleElement& v) const {
  std::string out = "[";
  for (std::size_t c = 0; c < rank(); ++c) {
    if (c) out += ", ";
    out += component(v, c).to_string();
  }
  return out + "]";
}

}  // namespace hkit
