#include "hkit/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkit {

namespace {

// Image of v under the map whose columns are `cols`, computed in `target`.
ModuleElement apply_map(const FreeModule& target, std::span<const ModuleElement> cols, const ModuleElement& v) {
  auto order = target.order();
  ModuleArith arith(order, target.ring->field);
  std::vector<ModTerm> acc;
  for (const auto& t : v.terms())
    for (const auto& u : cols[t.comp].terms())
      acc.push_back({u.mono * t.mono, u.comp, target.ring->field.mul(u.coef, t.coef)});
  return arith.normalize(std::move(acc));
}

bool find_unit(const std::vector<ModuleElement>& cols, std::size_t& col, std::uint32_t& row, Scalar& u) {
  for (col = 0; col < cols.size(); ++col)
    for (const auto& t : cols[col].terms())
      if (t.mono.is_one()) {
        row = t.comp;
        u = t.coef;
        return true;
      }
  return false;
}

std::vector<ModuleElement> drop_component(const std::vector<ModuleElement>& cols, std::uint32_t c,
                                          const ModuleArith& arith) {
  std::vector<ModuleElement> out;
  out.reserve(cols.size());
  for (const auto& v : cols) {
    std::vector<ModTerm> terms;
    for (const auto& t : v.terms()) {
      if (t.comp == c) continue;
      terms.push_back(t);
      if (t.comp > c) --terms.back().comp;
    }
    out.push_back(arith.normalize(std::move(terms)));
  }
  return out;
}

}  // namespace

bool FreeComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    FreeModule target = module(i);
    for (const auto& col : maps[i + 1])
      if (!apply_map(target, maps[i], col).is_zero()) return false;
  }
  return true;
}

bool FreeComplex::is_minimal() const {
  for (const auto& m : maps)
    for (const auto& col : m)
      for (const auto& t : col.terms())
        if (t.mono.is_one()) return false;
  return true;
}

FreeComplex free_resolution(const GradedModulePresentation& p, bool minimal) {
  GradedModulePresentation pruned = prune(p);
  FreeComplex c{pruned.ring(), {pruned.ambient.twists}, {}};
  if (pruned.ambient.rank() == 0) return c;
  const std::size_t n = pruned.ring()->nvars();

  SubmoduleData rel = pruned.relation_module();
  std::vector<ModuleElement> cols = minimal ? rel.minimal_generators() : rel.groebner_basis();
  while (!cols.empty()) {
    FreeModule target = c.module(c.twists.size() - 1);
    std::vector<int> src;
    for (const auto& v : cols) src.push_back(*target.degree(v));
    if (c.twists.size() > n + 1) throw std::logic_error("free_resolution: resolution longer than the number of variables");
    FreeModule source{c.ring, src};
    c.twists.push_back(src);
    c.maps.push_back(cols);
    SubmoduleData k = kernel_of_map(source, target, cols);
    cols = minimal ? k.minimal_generators() : k.groebner_basis();
  }
  return c;
}

FreeComplex minimalize(FreeComplex c) {
  const Field& field = c.ring->field;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      std::size_t j;
      std::uint32_t row;
      Scalar u;
      if (!find_unit(c.maps[i], j, row, u)) continue;
      changed = true;
      {
        ModuleOrder order(c.ring->order, c.twists[i]);
        ModuleArith arith(order, field);
        auto& cols = c.maps[i];
        const ModuleElement pivot = cols[j];
        Scalar inv_u = field.inv(u);
        for (std::size_t k = 0; k < cols.size(); ++k) {
          if (k == j) continue;
          for (;;) {
            auto it = std::find_if(cols[k].terms().begin(), cols[k].terms().end(),
                                   [row](const ModTerm& t) { return t.comp == row; });
            if (it == cols[k].terms().end()) break;
            Scalar a = field.mul(it->coef, inv_u);
            Monomial m = it->mono;
            cols[k] = arith.sub_multiple(cols[k], a, m, pivot);
          }
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        c.twists[i].erase(c.twists[i].begin() + row);
        ModuleOrder shrunk(c.ring->order, c.twists[i]);
        cols = drop_component(cols, row, ModuleArith(shrunk, field));
      }
      c.twists[i + 1].erase(c.twists[i + 1].begin() + static_cast<std::ptrdiff_t>(j));
      if (i + 1 < c.maps.size()) {
        ModuleOrder order(c.ring->order, c.twists[i + 1]);
        c.maps[i + 1] = drop_component(c.maps[i + 1], static_cast<std::uint32_t>(j), ModuleArith(order, field));
      }
      if (i > 0) c.maps[i - 1].erase(c.maps[i - 1].begin() + row);
      break;
    }
  }
  while (c.twists.size() > 1 && c.twists.back().empty()) {
    c.twists.pop_back();
    c.maps.pop_back();
  }
  return c;
}

BettiTable::BettiTable(const FreeComplex& res) {
  for (std::size_t i = 0; i < res.twists.size(); ++i)
    for (int t : res.twists[i]) ++entries_[{static_cast<int>(i), t}];
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::optional<int> BettiTable::projective_dimension() const {
  if (entries_.empty()) return std::nullopt;
  int pd = 0;
  for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
  return pd;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> reg;
  for (const auto& [k, v] : entries_)
    if (!reg || k.second - k.first > *reg) reg = k.second - k.first;
  return reg;
}

std::string BettiTable::to_json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << "\"(" << k.first << ',' << k.second << ")\": " << v;
  }
  os << '}';
  return os.str();
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "(zero module)\n";
  int pd = *projective_dimension();
  int lo = entries_.begin()->first.second - entries_.begin()->first.first, hi = lo;
  for (const auto& [k, v] : entries_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""}, total{"total:"};
  for (int i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    int s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    total.push_back(std::to_string(s));
  }
  rows.push_back(header);
  rows.push_back(total);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      int b = at(i, i + r);
      row.push_back(b ? std::to_string(b) : ".");
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ' ';
      os << std::string(width[k] - row[k].size(), ' ') << row[k];
    }
    os << '\n';
  }
  return os.str();
}

ModuleInvariants module_invariants(const GradedModulePresentation& p) {
  FreeComplex res = free_resolution(p, true);
  ModuleInvariants inv;
  inv.betti = BettiTable(res);
  if (inv.betti.is_zero()) throw std::invalid_argument("invariants of the zero module are undefined");
  HilbertData h = hilbert_module(p);
  inv.pd = *inv.betti.projective_dimension();
  inv.reg = *inv.betti.regularity();
  inv.depth = static_cast<int>(p.ring()->nvars()) - inv.pd;
  inv.dim = *h.dim;
  inv.cohen_macaulay = inv.depth == inv.dim;
  return inv;
}

int regularity(const GradedModulePresentation& p) { return module_invariants(p).reg; }
int depth(const GradedModulePresentation& p) { return module_invariants(p).depth; }
bool is_cohen_macaulay(const GradedModulePresentation& p) { return module_invariants(p).cohen_macaulay; }

LaurentPoly euler_kpoly(const FreeComplex& complex) {
  LaurentPoly k;
  for (std::size_t i = 0; i < complex.twists.size(); ++i)
    for (int t : complex.twists[i]) k = k + LaurentPoly::monomial(t, i % 2 ? -1 : 1);
  return k;
}

}  // namespace hkit
