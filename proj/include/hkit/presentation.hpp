#pragma once

#include <span>
#include <string>
#include <vector>

#include "hkit/submodule.hpp"

namespace hkit {

/// M = F0 / <relations>, with F0 a twisted free module. Houses R = S/I, the
/// syzygy modules and the deficiency modules uniformly.
struct GradedModulePresentation {
  FreeModule ambient;
  std::vector<ModuleElement> relations;
  std::string label;

  const Ring& ring() const { return ambient.ring; }
  SubmoduleData relation_module() const { return SubmoduleData(ambient, relations); }

  /// R = S/I.
  static GradedModulePresentation quotient_ring(const IdealData& ideal, std::string label = "R = S/I");
  /// Free module with the given generator degrees.
  static GradedModulePresentation free(const Ring& ring, std::vector<int> twists, std::string label = "F");
  static GradedModulePresentation from_submodule(const SubmoduleData& n, std::string label = "");
};

/// Removes generators killed by relations with unit (degree-0 scalar) entries,
/// substituting them away, until every relation lies in m F0.
GradedModulePresentation prune(const GradedModulePresentation& p);

/// Presentation of Z / B where Z = <z> and B = <b> ⊆ Z are submodules of F.
/// Generators are the z's; relations are the z-parts of the syzygies of (z, b).
GradedModulePresentation subquotient(const FreeModule& f, std::span<const ModuleElement> z,
                                     std::span<const ModuleElement> b, std::string label = "");

}  // namespace hkit
