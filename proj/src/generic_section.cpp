#include "hkit/generic_section.hpp"

#include <stdexcept>

#include "hkit/hilbert.hpp"

namespace hkit {

Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng) {
  const Field& f = ring->field;
  Polynomial l = Polynomial::constant(ring, 0);
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    long c;
    if (f.characteristic() == 0) {
      c = std::uniform_int_distribution<long>(1, 1000000)(rng);
    } else {
      c = std::uniform_int_distribution<long>(1, static_cast<long>(f.characteristic()) - 1)(rng);
    }
    l = l + Polynomial::variable(ring, v).scaled(f.from_int(c));
  }
  return l;
}

GradedModulePresentation quotient_by_form(const GradedModulePresentation& m, const Polynomial& l) {
  require_same_ring(m.ring(), l.ring());
  GradedModulePresentation out = m;
  for (std::size_t c = 0; c < m.ambient.rank(); ++c) out.relations.push_back(m.ambient.times(m.ambient.basis(c), l));
  out.label = m.label + " / l";
  return out;
}

GradedModulePresentation annihilator_of_form(const GradedModulePresentation& m, const Polynomial& l) {
  SubmoduleData n = m.relation_module();
  std::vector<Polynomial> gens{l};
  SubmoduleData q = module_quotient(n, gens);
  return subquotient(m.ambient, q.minimal_generators(), n.generators(), "0 :_M l");
}

GradedModulePresentation zeroth_local_cohomology(const GradedModulePresentation& m) {
  SubmoduleData n = m.relation_module();
  auto mm = irrelevant_ideal(m.ring());
  SubmoduleData sat = saturation(n, mm);
  return subquotient(m.ambient, sat.minimal_generators(), n.generators(), "H^0_m(M)");
}

GradedModulePresentation torsion_free_quotient(const GradedModulePresentation& m) {
  SubmoduleData n = m.relation_module();
  auto mm = irrelevant_ideal(m.ring());
  SubmoduleData sat = saturation(n, mm);
  return prune({m.ambient, sat.minimal_generators(), "M'"});
}

GenericSection generic_linear_section(const GradedModulePresentation& m, const GenericSectionOptions& options) {
  HilbertData hm = hilbert_module(m);
  if (!hm.dim || *hm.dim == 0) throw std::invalid_argument("generic_linear_section: module has dimension 0");

  GenericSection s;
  s.seed = options.seed;
  s.m_prime = torsion_free_quotient(m);
  s.h0 = zeroth_local_cohomology(m);
  const LaurentPoly expected = LaurentPoly::one_minus_t_pow(1) * hilbert_module(s.m_prime).kpoly;

  std::mt19937_64 rng(options.seed);
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    Polynomial l = random_linear_form(m.ring(), rng);
    GradedModulePresentation cut = quotient_by_form(s.m_prime, l);
    if (hilbert_module(cut).kpoly == expected) {
      s.l = l;
      s.attempts = attempt;
      s.m_prime_mod_l = std::move(cut);
      s.m_mod_l = quotient_by_form(m, l);
      s.ann_l = annihilator_of_form(m, l);
      return s;
    }
    s.warnings.push_back("linear form " + l.to_string() + " is a zero divisor on M'; drawing again");
  }
  throw std::runtime_error("generic_linear_section: no regular linear form found");
}

}  // namespace hkit
