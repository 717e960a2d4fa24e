#pragma once

#include "hkit/submodule.hpp"

namespace hkit {

/// I^[p] = (g^p : g a generator of I). Throws std::invalid_argument over QQ.
IdealData bracket_power(const IdealData& ideal);

struct FedderResult {
  std::uint32_t p = 0;
  bool f_pure = false;
  /// Minimal generators of I^[p] : I.
  std::vector<Polynomial> colon_generators;
};

/// Fedder's criterion at the homogeneous maximal ideal: S/I is F-pure iff
/// (I^[p] : I) is not contained in m^[p]. Throws std::invalid_argument over QQ.
FedderResult fedder_f_pure(const IdealData& ideal);

}  // namespace hkit
