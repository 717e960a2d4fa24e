#include "hkit/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkit {

namespace {
std::uint32_t require_char_p(const IdealData& ideal) {
  std::uint32_t p = ideal.ring()->field.characteristic();
  if (p == 0) throw std::invalid_argument("Frobenius requires a field of positive characteristic");
  return p;
}
}  // namespace

IdealData bracket_power(const IdealData& ideal) {
  const std::uint32_t p = require_char_p(ideal);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(p));
  return IdealData(ideal.ring(), std::move(gens));
}

FedderResult fedder_f_pure(const IdealData& ideal) {
  FedderResult r;
  r.p = require_char_p(ideal);
  if (ideal.is_zero()) {
    // S itself: (0 : 0) = S.
    r.f_pure = true;
    r.colon_generators.push_back(Polynomial::constant(ideal.ring(), 1));
    return r;
  }
  IdealData j = ideal_quotient(bracket_power(ideal), ideal);
  r.colon_generators = j.minimal_generators();
  // m^[p] is monomial: a polynomial lies in it iff every term has some exponent >= p.
  for (const auto& g : j.groebner_basis()) {
    for (const auto& t : g.terms()) {
      auto e = t.mono.exponents();
      if (std::all_of(e.begin(), e.end(), [&](int x) { return x < static_cast<int>(r.p); })) {
        r.f_pure = true;
        return r;
      }
    }
  }
  return r;
}

}  // namespace hkit
