#pragma once

#include "packetlab/errors.hpp"
#include "packetlab/types.hpp"

namespace packetlab {

// hbar, particle mass mu, and c (photon mode).  Immutable after construction.
struct UnitSystem {
  Real hbar = 1.0;
  Real mass = 1.0;
  Real c = 1.0;

  UnitSystem() = default;
  UnitSystem(Real hbar_, Real mass_, Real c_ = 1.0) : hbar(hbar_), mass(mass_), c(c_) {
    if (!(hbar > 0) || !(mass > 0) || !(c > 0))
      throw DomainError("unit constants must be strictly positive");
  }

  // hbar = 1, 2m = 1: kinetic term -d^2/dx^2, E = k^2
  static UnitSystem appendix() { return UnitSystem(1.0, 0.5, 1.0); }
};

}  // namespace packetlab
