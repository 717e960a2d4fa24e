#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hkit/presentation.hpp"

namespace hkit {

/// Coefficients uniform in {1..10^6} over QQ, uniform nonzero residues over GF(p).
Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng);

/// M / lM: the relations of M plus l e_c for every generator e_c.
GradedModulePresentation quotient_by_form(const GradedModulePresentation& m, const Polynomial& l);
/// 0 :_M l as a subquotient of the ambient free module.
GradedModulePresentation annihilator_of_form(const GradedModulePresentation& m, const Polynomial& l);
/// H^0_m(M) = N^sat / N for M = F/N.
GradedModulePresentation zeroth_local_cohomology(const GradedModulePresentation& m);
/// M' = M / H^0_m(M) = F / N^sat.
GradedModulePresentation torsion_free_quotient(const GradedModulePresentation& m);

struct GenericSectionOptions {
  std::uint64_t seed = 0;
  int max_attempts = 16;
};

struct GenericSection {
  Polynomial l{Ring{}};
  std::uint64_t seed = 0;
  int attempts = 0;
  GradedModulePresentation m_mod_l;
  GradedModulePresentation m_prime;
  GradedModulePresentation m_prime_mod_l;
  GradedModulePresentation h0;
  GradedModulePresentation ann_l;
  /// One entry per rejected form.
  std::vector<std::string> warnings;
};

/// Draws l until it is regular on M' (checked via K(M'/lM') = (1-t) K(M')).
/// Throws std::invalid_argument when dim M = 0, std::runtime_error when no
/// draw succeeds.
GenericSection generic_linear_section(const GradedModulePresentation& m, const GenericSectionOptions& options = {});

}  // namespace hkit
