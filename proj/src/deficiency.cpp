#include "hkit/deficiency.hpp"

#include <future>
#include <stdexcept>

namespace hkit {

std::optional<int> DeficiencyModule::initial_degree() const {
  if (hilbert.is_zero()) return std::nullopt;
  return hilbert.numerator.low();
}

const DeficiencyModule& DeficiencyProfile::K(int i) const {
  static const DeficiencyModule zero{};
  if (i < 0 || i >= static_cast<int>(modules.size())) return zero;
  return modules[i];
}

FreeComplex dual_complex(const FreeComplex& res) {
  const int n = static_cast<int>(res.ring->nvars());
  FreeComplex d{res.ring, {}, {}};
  for (const auto& tw : res.twists) {
    std::vector<int> t;
    for (int a : tw) t.push_back(n - a);
    d.twists.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    // maps[i] : F_{i+1} -> F_i, transpose : D_i -> D_{i+1}.
    std::vector<std::vector<ModTerm>> cols(res.twists[i].size());
    for (std::size_t k = 0; k < res.maps[i].size(); ++k)
      for (const auto& t : res.maps[i][k].terms()) cols[t.comp].push_back({t.mono, static_cast<std::uint32_t>(k), t.coef});
    ModuleOrder order(res.ring->order, d.twists[i + 1]);
    ModuleArith arith(order, res.ring->field);
    std::vector<ModuleElement> m;
    for (auto& c : cols) m.push_back(arith.normalize(std::move(c)));
    d.maps.push_back(std::move(m));
  }
  return d;
}

namespace {

DeficiencyModule zero_module(const Ring& ring, int i) {
  DeficiencyModule k;
  k.index = i;
  k.presentation = GradedModulePresentation::free(ring, {}, "K_" + std::to_string(i));
  k.hilbert.nvars = ring->nvars();
  return k;
}

// Ext^j(M, S(-n)) = ker(D_j -> D_{j+1}) / im(D_{j-1} -> D_j).
DeficiencyModule ext_module(const FreeComplex& dual, int n, int i, bool with_reg) {
  const int j = n - i;
  const Ring& ring = dual.ring;
  if (j < 0 || j >= static_cast<int>(dual.twists.size()) || dual.twists[j].empty()) return zero_module(ring, i);
  FreeModule dj = dual.module(j);

  std::vector<ModuleElement> z;
  if (j < static_cast<int>(dual.maps.size())) {
    z = kernel_of_map(dj, dual.module(j + 1), dual.maps[j]).minimal_generators();
  } else {
    for (std::size_t c = 0; c < dj.rank(); ++c) z.push_back(dj.basis(c));
  }
  std::vector<ModuleElement> b;
  if (j > 0) b = dual.maps[j - 1];

  DeficiencyModule k;
  k.index = i;
  k.presentation = subquotient(dj, z, b, "K_" + std::to_string(i));
  k.hilbert = hilbert_module(k.presentation);
  if (with_reg && !k.hilbert.is_zero()) k.reg = module_invariants(k.presentation).reg;
  return k;
}

}  // namespace

DeficiencyProfile deficiency_profile(const GradedModulePresentation& m, const ProfileOptions& options) {
  DeficiencyProfile p;
  p.nvars = m.ring()->nvars();
  p.resolution = free_resolution(m, true);
  BettiTable betti(p.resolution);
  if (betti.is_zero()) throw std::invalid_argument("deficiency profile of the zero module");
  HilbertData h = hilbert_module(m);
  const int n = static_cast<int>(p.nvars);
  p.dim = *h.dim;
  p.pd = *betti.projective_dimension();
  p.depth = n - p.pd;

  FreeComplex dual = dual_complex(p.resolution);
  const int top = options.all_indices ? n : p.dim;
  p.modules.resize(static_cast<std::size_t>(top) + 1);
  std::vector<std::future<DeficiencyModule>> pending(p.modules.size());
  for (int i = 0; i <= top; ++i) {
    bool needed = options.all_indices || (i >= p.depth && i <= p.dim);
    if (!needed) {
      p.modules[i] = zero_module(m.ring(), i);
      continue;
    }
    auto policy = options.parallel ? std::launch::async : std::launch::deferred;
    pending[i] = std::async(policy, ext_module, std::cref(dual), n, i, options.regularity);
  }
  for (int i = 0; i <= top; ++i)
    if (pending[i].valid()) p.modules[i] = pending[i].get();
  return p;
}

namespace {
void require_reg(const DeficiencyModule& k) {
  if (!k.is_zero() && !k.reg) throw std::logic_error("deficiency profile computed without regularity");
}
}  // namespace

bool check_MT(const DeficiencyProfile& p, int r) {
  for (int i = 0; i < p.dim; ++i) {
    const auto& k = p.K(i);
    if (k.is_zero()) continue;
    require_reg(k);
    if (*k.reg > i - r) return false;
  }
  return true;
}

std::optional<int> max_MT(const DeficiencyProfile& p) {
  std::optional<int> best;
  for (int i = 0; i < p.dim; ++i) {
    const auto& k = p.K(i);
    if (k.is_zero()) continue;
    require_reg(k);
    int v = i - *k.reg;
    if (!best || v < *best) best = v;
  }
  return best;
}

bool check_Sr(const DeficiencyProfile& p, int r) {
  for (int i = 0; i < p.dim; ++i) {
    const auto& k = p.K(i);
    if (!k.is_zero() && *k.dim() > i - r) return false;
  }
  return true;
}

std::optional<int> max_Sr(const DeficiencyProfile& p) {
  std::optional<int> best;
  for (int i = 0; i < p.dim; ++i) {
    const auto& k = p.K(i);
    if (k.is_zero()) continue;
    int v = i - *k.dim();
    if (!best || v < *best) best = v;
  }
  return best;
}

bool check_unmixed(const DeficiencyProfile& p) {
  for (int i = 0; i < p.dim; ++i) {
    const auto& k = p.K(i);
    if (!k.is_zero() && *k.dim() >= i) return false;
  }
  return true;
}

std::map<int, std::int64_t> local_cohomology_hf(const DeficiencyProfile& p, int i, int lo, int hi) {
  std::map<int, std::int64_t> out;
  const auto& k = p.K(i);
  for (int j = lo; j <= hi; ++j) out[j] = k.is_zero() ? 0 : k.dim_in_degree(-j);
  return out;
}

}  // namespace hkit
